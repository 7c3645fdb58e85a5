from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from digit_ecc import a1_codec, a2_codec, nwxli_codec, prototype_codec
from digit_ecc.a2_codec import choose_a2_r, choose_sparse_r
from digit_ecc.code_model import Codeword, CodeSpec, DecodeOutcome, Family
from digit_ecc.errors import UsageError


class FamilySelector(str, Enum):
    PROTOTYPE = "prototype"
    A1 = "a1"
    A2 = "a2"
    A2_SPARSE = "a2sparse"
    GOLAY = "golay"
    NWXLI = "nwxli"


FAMILY_ALIASES: Dict[str, FamilySelector] = {
    "prototype": FamilySelector.PROTOTYPE,
    "proto": FamilySelector.PROTOTYPE,
    "sec-ded": FamilySelector.PROTOTYPE,
    "a1": FamilySelector.A1,
    "adaptive": FamilySelector.A1,
    "a2": FamilySelector.A2,
    "sec-ted": FamilySelector.A2,
    "a2sparse": FamilySelector.A2_SPARSE,
    "a2-sparse": FamilySelector.A2_SPARSE,
    "a2_sparse": FamilySelector.A2_SPARSE,
    "sparse": FamilySelector.A2_SPARSE,
    "golay": FamilySelector.GOLAY,
    "ternary-golay": FamilySelector.GOLAY,
    "golay11": FamilySelector.GOLAY,
    "nwxli": FamilySelector.NWXLI,
    "n-wxli": FamilySelector.NWXLI,
    "wxli": FamilySelector.NWXLI,
}

__all__ = [
    "FamilySelector",
    "Codec",
    "normalize_family",
    "build_spec",
    "codec_for",
    "choose_a2_r",
    "choose_sparse_r",
]


def normalize_family(name: Optional[str]) -> FamilySelector:
    if not name:
        raise UsageError("A code family is required.")

    key = name.strip().lower()
    if key in FAMILY_ALIASES:
        return FAMILY_ALIASES[key]

    supported = ", ".join(selector.value for selector in FamilySelector)
    raise UsageError(f"Unknown code family '{name}'. Supported families: {supported}.")


def build_spec(
    family: str | FamilySelector,
    p: Optional[int] = None,
    r: Optional[int] = None,
    message_len: Optional[int] = None,
    global_check: bool = False,
    set_path: Optional[str] = None,
    wise: Optional[int] = None,
    workers: Optional[int] = None,
) -> CodeSpec:
    selector = family if isinstance(family, FamilySelector) else normalize_family(family)
    if global_check and selector is not FamilySelector.A2_SPARSE:
        raise UsageError("The global check position only exists for a2sparse.")
    if set_path is not None and selector is not FamilySelector.NWXLI:
        raise UsageError("An index set file is only read for nwxli.")

    if selector is FamilySelector.PROTOTYPE:
        if p is None or r is None:
            raise UsageError("prototype needs --p and --r.")
        spec = prototype_codec.build_prototype_spec(p, r)
        if message_len is not None and message_len != spec.k_msg:
            raise UsageError(f"prototype p={p} r={r} has fixed message length {spec.k_msg}.")
        return spec

    if p not in (None, 3):
        raise UsageError(f"{selector.value} is ternary; base {p} is not supported.")

    if selector is FamilySelector.A1:
        return a1_codec.build_a1_layout(r=r, m=message_len).spec
    if selector is FamilySelector.A2:
        if r is None:
            if message_len is None:
                raise UsageError("a2 needs --r or --message-len.")
            r = choose_a2_r(message_len)
        return a2_codec.build_a2_spec(r, message_len)
    if selector is FamilySelector.A2_SPARSE:
        if r is None:
            if message_len is None:
                raise UsageError("a2sparse needs --r or --message-len.")
            r = choose_sparse_r(message_len)
        return a2_codec.build_sparse_spec(r, message_len, global_check)
    if selector is FamilySelector.GOLAY:
        if r not in (None, 5) or message_len not in (None, 6):
            raise UsageError("golay has fixed parameters [11,6,5]_3.")
        return nwxli_codec.golay_spec().code
    if set_path is None:
        raise UsageError("nwxli needs --set FILE.")
    vectors = nwxli_codec.load_index_set(set_path)
    return nwxli_codec.build_nwxli_spec(vectors, n_cert=wise, workers=workers).code


@dataclass(frozen=True)
class Codec:
    """Uniform encode/decode surface over one code instance."""

    spec: CodeSpec
    _encode: Callable[[Sequence[int]], Codeword]
    _decode: Callable[[Codeword], Tuple[DecodeOutcome, Codeword]]
    _syndromes: Callable[[Codeword], str]

    def encode(self, message: Sequence[int]) -> Codeword:
        return self._encode(message)

    def decode(self, word: Codeword) -> Tuple[DecodeOutcome, Codeword]:
        return self._decode(word)

    def describe_syndromes(self, word: Codeword) -> str:
        return self._syndromes(word)

    def extract_message(self, word: Codeword) -> Tuple[int, ...]:
        return tuple(word.symbols[slot] for slot in self.spec.message_order)

    def random_message(self, rng: np.random.Generator) -> Tuple[int, ...]:
        return tuple(int(v) for v in rng.integers(0, self.spec.base, size=self.spec.k_msg))


def _prototype_syndromes(spec: CodeSpec, word: Codeword) -> str:
    syn = prototype_codec.compute_syndromes(spec, word)
    return f"S={syn.digit_syndromes} S_all={syn.global_sum}"


def codec_for(spec: CodeSpec) -> Codec:
    if spec.family is Family.PROTOTYPE:
        return Codec(
            spec,
            lambda m: prototype_codec.encode(spec, m),
            lambda w: prototype_codec.decode(spec, w),
            lambda w: _prototype_syndromes(spec, w),
        )
    if spec.family is Family.A1:
        layout = a1_codec.layout_of(spec)
        return Codec(
            spec,
            lambda m: a1_codec.encode(layout, m),
            lambda w: a1_codec.decode(layout, w),
            lambda w: f"P_all={a1_codec.xor_sum(spec, w.symbols)}",
        )
    if spec.family is Family.A2:
        return Codec(
            spec,
            lambda m: a2_codec.encode(spec, m),
            lambda w: a2_codec.decode(spec, w),
            lambda w: a2_codec.compute_syndromes(spec, w).describe(),
        )
    if spec.family is Family.A2_SPARSE:
        return Codec(
            spec,
            lambda m: a2_codec.sparse_encode(spec, m),
            lambda w: a2_codec.sparse_decode(spec, w),
            lambda w: a2_codec.sparse_compute_syndromes(spec, w).describe(),
        )
    view = nwxli_codec.NwxliSpec.from_code(spec)
    return Codec(
        spec,
        lambda m: nwxli_codec.encode(view, m),
        lambda w: nwxli_codec.decode(view, w),
        lambda w: f"P_all={nwxli_codec.compute_syndrome(view, w)}",
    )
