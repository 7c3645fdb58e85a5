"""
Codes from an arbitrary n-wise independent index set.

Positions are the members of the set, the redundant subset spans the digit
space, and a received word is decoded by searching error patterns of
weight up to t = n // 2 whose index-weighted XOR sum explains P_all.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from digit_ecc.code_model import (
    Codeword,
    CodeSpec,
    DecodeOutcome,
    Family,
    Position,
    Role,
    apply_corrections,
    place_message,
    read_message,
)
from digit_ecc.digit_arith import DigitVec, inverse, scalar_mul, weighted_sum
from digit_ecc.errors import DataError, DecoderInvariantError, UsageError
from digit_ecc.wxli_sets import certified_order, coordinates, is_kwise_independent, spans

logger = logging.getLogger(__name__)

GOLAY_SET = (
    "00001", "00010", "00100", "01000", "10000",
    "01122", "10212", "12021", "12102", "22110", "22222",
)

# Largest independence order tried when none is given
DEFAULT_MAX_ORDER = 4


@dataclass(frozen=True)
class NwxliSpec:
    code: CodeSpec
    n_cert: int

    @classmethod
    def from_code(cls, code: CodeSpec) -> "NwxliSpec":
        if code.family is not Family.NWXLI:
            raise UsageError(f"{code.label} is not an n-WXLI layout.")
        return cls(code, code.distance - 1)

    @property
    def index_set(self) -> Tuple[DigitVec, ...]:
        return tuple(pos.index for pos in self.code.positions)

    @property
    def redundant(self) -> Tuple[DigitVec, ...]:
        return tuple(pos.index for pos in self.code.positions if pos.role is Role.REDUNDANT)

    @property
    def message(self) -> Tuple[DigitVec, ...]:
        return tuple(self.code.active_positions[slot].index for slot in self.code.message_order)

    @property
    def t(self) -> int:
        return self.n_cert // 2


def _elementary_members(vectors: Sequence[DigitVec]) -> Tuple[DigitVec, ...]:
    p, r = vectors[0].base, vectors[0].length
    wanted = {DigitVec.elementary(p, r, i) for i in range(1, r + 1)}
    found = tuple(vec for vec in vectors if vec in wanted)
    if len(found) != r:
        raise UsageError(f"Index set must contain all {r} elementary vectors.")
    return found


def build_nwxli_spec(
    index_set: Sequence[DigitVec],
    n_cert: Optional[int] = None,
    redundant: Optional[Sequence[DigitVec]] = None,
    name: str = "nwxli",
    workers: Optional[int] = None,
) -> NwxliSpec:
    """
    Certify the set and lay it out: redundant members ascending by index,
    then the message members in the order given.

    Without an explicit `redundant` subset the elementary vectors are used;
    an explicit subset only has to span the digit space.
    """
    vectors = tuple(index_set)
    if not vectors:
        raise UsageError("Index set is empty.")
    if len(set(vectors)) != len(vectors):
        raise UsageError("Index set has duplicate members.")
    if any(vec.is_zero() for vec in vectors):
        raise UsageError("The zero vector cannot index a position.")
    p, r = vectors[0].base, vectors[0].length
    if any(vec.base != p or vec.length != r for vec in vectors):
        raise UsageError("All members must share base and length.")
    if redundant is None:
        basis = _elementary_members(vectors)
    else:
        basis = tuple(redundant)
        if len(basis) != r or not set(basis) <= set(vectors) or not spans(basis):
            raise UsageError(f"Redundant subset must be {r} members of the set spanning the digit space.")
    if len(vectors) <= r:
        raise UsageError("Index set leaves no message positions.")

    if n_cert is None:
        n_cert = certified_order(vectors, DEFAULT_MAX_ORDER, workers=workers)
        logger.info("Index set certified %d-wise independent", n_cert)
    else:
        verdict = is_kwise_independent(vectors, n_cert, workers=workers)
        if not verdict.independent:
            raise UsageError(f"Index set is not {n_cert}-wise independent: {verdict.describe()}")

    # redundant positions ascending by index, then message positions in declared order
    members = set(basis)
    message = [vec for vec in vectors if vec not in members]
    positions = tuple(Position(Role.REDUNDANT, vec) for vec in sorted(basis, key=lambda v: v.index))
    positions += tuple(Position(Role.MESSAGE, vec) for vec in message)
    message_order = tuple(range(r, r + len(message)))
    code = CodeSpec(Family.NWXLI, p, r, n_cert + 1, positions, message_order=message_order, name=name)
    return NwxliSpec(code, n_cert)


@lru_cache(maxsize=None)
def golay_spec() -> NwxliSpec:
    vectors = tuple(DigitVec.parse(text, 3) for text in GOLAY_SET)
    return build_nwxli_spec(vectors, n_cert=4, name="golay")


def load_index_set(path: str | Path, p: int = 3) -> List[DigitVec]:
    """One digit vector per line; blank lines and '#' comments are skipped."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DataError(f"Cannot read index set {path}: {e}") from e
    vectors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            vectors.append(DigitVec.parse(line, p))
        except DataError as e:
            raise DataError(f"{path}:{lineno}: {e}") from e
    if not vectors:
        raise DataError(f"Index set {path} is empty.")
    r = vectors[0].length
    if any(vec.length != r for vec in vectors):
        raise DataError(f"{path}: members have different lengths.")
    head = set(vectors[:r])
    if head != {DigitVec.elementary(p, r, i) for i in range(1, r + 1)}:
        raise DataError(f"{path}: the first {r} lines must be the elementary vectors.")
    return vectors


def _xor(code: CodeSpec, symbols: Sequence[int]) -> DigitVec:
    return weighted_sum(
        ((value, pos.index) for pos, value in zip(code.active_positions, symbols)), code.base, code.r
    )


def encode(spec: NwxliSpec, message: Sequence[int]) -> Codeword:
    code = spec.code
    symbols = place_message(code, message)
    target = inverse(_xor(code, symbols))
    basis = spec.redundant
    for vec, value in zip(basis, coordinates(target, basis)):
        symbols[code.slot_of_index(vec)] = value
    return Codeword(code, tuple(symbols))


def compute_syndrome(spec: NwxliSpec, word: Codeword) -> DigitVec:
    return _xor(spec.code, word.symbols)


def _patterns(spec: NwxliSpec, syndrome: DigitVec, w: int):
    """Every (slot, delta) tuple of weight w whose weighted sum is the syndrome."""
    code = spec.code
    p = code.base
    indices = [pos.index for pos in code.active_positions]
    lookup = {vec: slot for slot, vec in enumerate(indices)}
    for head in combinations(range(len(indices)), w - 1):
        for coefs in product(range(1, p), repeat=w - 1):
            rest = syndrome - weighted_sum(zip(coefs, (indices[s] for s in head)), p, code.r)
            if rest.is_zero():
                continue
            for gamma in range(1, p):
                slot = lookup.get(scalar_mul(pow(gamma, p - 2, p), rest))
                if slot is not None and (not head or slot > head[-1]):
                    yield tuple(zip(head, coefs)) + ((slot, gamma),)


def decode(spec: NwxliSpec, word: Codeword, debug: bool = False) -> Tuple[DecodeOutcome, Codeword]:
    """
    Bounded-distance decode up to weight t.

    With `debug` the search runs over every weight up to t and raises
    DecoderInvariantError when a syndrome has two explanations.
    """
    syndrome = compute_syndrome(spec, word)
    if syndrome.is_zero():
        return DecodeOutcome.clean(), word
    found = None
    for w in range(1, spec.t + 1):
        for pattern in _patterns(spec, syndrome, w):
            if found is None:
                found = pattern
                if not debug:
                    break
            else:
                raise DecoderInvariantError(f"Syndrome {syndrome} has two explanations: {found} and {pattern}.")
        if found is not None and not debug:
            break
    if found is None:
        return DecodeOutcome.detected(), word
    outcome = DecodeOutcome.multi(spec.code, found)
    return outcome, apply_corrections(word, outcome)


def extract_message(spec: NwxliSpec, word: Codeword) -> Tuple[int, ...]:
    return read_message(word)
