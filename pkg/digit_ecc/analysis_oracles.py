"""
Brute-force oracles that certify codes independently of their decoders.

Two distance oracles (a dependency search over check-matrix columns and a
full enumeration of codewords through the real encoder) check each other,
and the error sweeps classify what a decoder does with every error
pattern of a given weight.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from digit_ecc import a1_codec, a2_codec, nwxli_codec, prototype_codec
from digit_ecc.code_model import Codeword, CodeSpec, DecodeOutcome, Family, OutcomeKind
from digit_ecc.errors import BudgetError, UsageError
from digit_ecc.families import Codec, codec_for
from digit_ecc.wxli_sets import search_weight

logger = logging.getLogger(__name__)

ENUMERATION_BUDGET = 10 ** 7
MAX_SEARCH_WEIGHT = 4

ErrorPattern = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class CheckMatrix:
    base: int
    rows: np.ndarray
    labels: Tuple[str, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return tuple(self.rows.shape)

    def syndrome(self, symbols: Sequence[int]) -> Tuple[int, ...]:
        vector = np.asarray(symbols, dtype=np.int64)
        return tuple(int(v) for v in self.rows.dot(vector) % self.base)

    def is_codeword(self, symbols: Sequence[int]) -> bool:
        return not any(self.syndrome(symbols))

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in col) for col in self.rows.T)


def _digit_rows(spec: CodeSpec) -> List[List[int]]:
    """One row per index digit, most significant first; index-less positions get zeros."""
    rows = []
    for j in range(spec.r):
        rows.append([pos.index.digits[j] if pos.index is not None else 0 for pos in spec.active_positions])
    return rows


def check_matrix_of(spec: CodeSpec) -> CheckMatrix:
    rows = _digit_rows(spec)
    labels = [f"digit{spec.r - 1 - j}" for j in range(spec.r)]
    if spec.family is Family.PROTOTYPE or (spec.family is Family.A2_SPARSE and spec.global_check):
        rows.append([1] * spec.n_block)
        labels.append("sum")
    elif spec.family is Family.A2:
        for group in (1, 2):
            rows.append([1 if pos.group == group else 0 for pos in spec.active_positions])
            labels.append(f"group{group}")
    return CheckMatrix(spec.base, np.array(rows, dtype=np.int64), tuple(labels))


def codec_syndrome(spec: CodeSpec, word: Codeword) -> Tuple[int, ...]:
    """The codec's own syndromes laid out in check-matrix row order."""
    if spec.family is Family.PROTOTYPE:
        syn = prototype_codec.compute_syndromes(spec, word)
        return syn.digit_syndromes.digits + (syn.global_sum,)
    if spec.family is Family.A1:
        return a1_codec.xor_sum(spec, word.symbols).digits
    if spec.family is Family.A2:
        syn = a2_codec.compute_syndromes(spec, word)
        return syn.p_all.digits + (syn.p1, syn.p2)
    if spec.family is Family.A2_SPARSE:
        syn = a2_codec.sparse_compute_syndromes(spec, word)
        return syn.idx_xor.digits + ((syn.value,) if syn.value is not None else ())
    return nwxli_codec.compute_syndrome(nwxli_codec.NwxliSpec.from_code(spec), word).digits


@dataclass(frozen=True)
class DistanceVerdict:
    w_max: int
    # weight -> (slot, coefficient) pairs of a column dependency, or None
    dependencies: Dict[int, Optional[ErrorPattern]]

    @property
    def first_dependency(self) -> Optional[int]:
        found = [w for w, dep in sorted(self.dependencies.items()) if dep is not None]
        return found[0] if found else None

    @property
    def distance_exceeds_budget(self) -> bool:
        return self.first_dependency is None

    def witness(self, spec: CodeSpec) -> Optional[Codeword]:
        w = self.first_dependency
        if w is None:
            return None
        symbols = [0] * spec.n_block
        for slot, coef in self.dependencies[w]:
            symbols[slot] = coef
        return Codeword(spec, tuple(symbols))

    def describe(self) -> str:
        w = self.first_dependency
        if w is None:
            return f"d>{self.w_max}"
        return f"d={w}"


def min_distance_column_search(
    matrix: CheckMatrix, w_max: int, workers: Optional[int] = None
) -> DistanceVerdict:
    if not 1 <= w_max <= MAX_SEARCH_WEIGHT:
        raise BudgetError(f"Column search weight must lie in [1, {MAX_SEARCH_WEIGHT}], got {w_max}.")
    columns = matrix.columns()
    dependencies: Dict[int, Optional[ErrorPattern]] = {}
    for w in range(1, w_max + 1):
        hit = search_weight(columns, matrix.base, w, workers)
        dependencies[w] = None if hit is None else tuple(sorted((slot, coef) for coef, slot in hit))
        logger.debug("Column search w=%d: %s", w, "dependent" if hit else "none")
    return DistanceVerdict(w_max, dependencies)


def min_weight_enumeration(spec: CodeSpec) -> int:
    """Minimum weight over all nonzero codewords, through the real encoder."""
    total = spec.base ** spec.k_msg
    if total > ENUMERATION_BUDGET:
        raise BudgetError(
            f"{spec.label} has {total} codewords, above the enumeration budget of {ENUMERATION_BUDGET}."
        )
    codec = codec_for(spec)
    best = spec.n_block
    for message in product(range(spec.base), repeat=spec.k_msg):
        if not any(message):
            continue
        best = min(best, codec.encode(message).weight())
    logger.info("%s enumerated %d codewords, minimum weight %d", spec.label, total - 1, best)
    return best


@dataclass
class SweepStats:
    trials: int = 0
    clean: int = 0
    corrected_ok: int = 0
    miscorrected: int = 0
    detected: int = 0
    silent: int = 0

    def record(self, category: str):
        self.trials += 1
        setattr(self, category, getattr(self, category) + 1)

    def merge(self, other: "SweepStats") -> "SweepStats":
        return SweepStats(**{key: getattr(self, key) + getattr(other, key) for key in _COUNT_FIELDS})

    def is_partition(self) -> bool:
        return self.trials == sum(getattr(self, key) for key in _COUNT_FIELDS[1:])

    def rates(self) -> Dict[str, float]:
        if not self.trials:
            return {key: 0.0 for key in _COUNT_FIELDS[1:]}
        return {key: getattr(self, key) / self.trials for key in _COUNT_FIELDS[1:]}

    def to_record(self) -> str:
        return " ".join(f"{key}={getattr(self, key)}" for key in _COUNT_FIELDS)

    def to_document(self) -> Dict[str, int]:
        return asdict(self)


_COUNT_FIELDS = ("trials", "clean", "corrected_ok", "miscorrected", "detected", "silent")


def classify(sent: Codeword, received: Codeword, outcome: DecodeOutcome, repaired: Codeword) -> str:
    """SweepStats category of one decode against the transmitted word."""
    corrupted = received.symbols != sent.symbols
    if outcome.kind is OutcomeKind.CLEAN:
        return "silent" if corrupted else "clean"
    if outcome.kind is OutcomeKind.DETECTED_MULTIPLE:
        return "detected"
    return "corrected_ok" if repaired.symbols == sent.symbols else "miscorrected"


def error_patterns(n_block: int, p: int, w: int) -> Iterator[ErrorPattern]:
    for slots in combinations(range(n_block), w):
        for offsets in product(range(1, p), repeat=w):
            yield tuple(zip(slots, offsets))


def pattern_count(n_block: int, p: int, w: int) -> int:
    return comb(n_block, w) * (p - 1) ** w


def sample_pattern(rng: np.random.Generator, n_block: int, p: int, w: int) -> ErrorPattern:
    slots = sorted(int(s) for s in rng.choice(n_block, size=w, replace=False))
    return tuple((slot, int(rng.integers(1, p))) for slot in slots)


def error_sweep(
    codec: Codec,
    codeword: Codeword,
    w: int,
    samples: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> SweepStats:
    """
    Inject every weight-w pattern (or `samples` random ones) into the
    codeword, decode and classify.
    """
    spec = codec.spec
    if not 1 <= w <= spec.n_block:
        raise UsageError(f"Error weight must lie in [1, {spec.n_block}], got {w}.")
    if samples is None:
        patterns: Iterator[ErrorPattern] = error_patterns(spec.n_block, spec.base, w)
    else:
        if rng is None:
            raise UsageError("Sampled sweeps need a random generator.")
        patterns = (sample_pattern(rng, spec.n_block, spec.base, w) for _ in range(samples))
    stats = SweepStats()
    for pattern in patterns:
        received = codeword.add_error(pattern)
        outcome, repaired = codec.decode(received)
        stats.record(classify(codeword, received, outcome, repaired))
    return stats


@dataclass
class SweepReport:
    spec_label: str
    weight: int
    codewords: int
    exhaustive: bool
    stats: SweepStats = field(default_factory=SweepStats)

    def to_record(self) -> str:
        mode = "exhaustive" if self.exhaustive else "sampled"
        return (
            f"spec={self.spec_label} weight={self.weight} codewords={self.codewords} "
            f"mode={mode} {self.stats.to_record()}"
        )

    def to_document(self) -> Dict[str, object]:
        return {
            "spec": self.spec_label,
            "weight": self.weight,
            "codewords": self.codewords,
            "mode": "exhaustive" if self.exhaustive else "sampled",
            "counts": self.stats.to_document(),
        }


def sweep_codewords(
    spec: CodeSpec,
    w: int,
    codewords: int,
    seed: int,
    samples: Optional[int] = None,
) -> SweepReport:
    """Sweep the all-zero codeword plus `codewords` random ones."""
    codec = codec_for(spec)
    rng = np.random.default_rng(seed)
    words = [spec.zero_word()] + [codec.encode(codec.random_message(rng)) for _ in range(codewords)]
    report = SweepReport(spec.label, w, len(words), samples is None)
    for word in words:
        report.stats = report.stats.merge(error_sweep(codec, word, w, samples=samples, rng=rng))
    logger.info("Sweep %s", report.to_record())
    return report
