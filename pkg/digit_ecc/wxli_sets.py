"""
k-wise XOR-linearly-independent index sets.

A set S of digit vectors is k-wise independent when no combination of at
most k distinct members with nonzero coefficients XOR-sums to the zero
vector. Used as code positions it gives minimum distance k + 1. The
ternary family I1 (digits in {0, 1}, between n and 2n - 1 ones) is 3-wise
independent and carries the distance-4 A2 codes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import galois
import numpy as np

from digit_ecc.config import Config, resolve_workers
from digit_ecc.digit_arith import DigitVec, scalar_mul
from digit_ecc.errors import BudgetError, UsageError

logger = logging.getLogger(__name__)

Term = Tuple[int, DigitVec]


@dataclass(frozen=True)
class WxliFamily:
    r: int
    n: int
    i1: Tuple[DigitVec, ...]
    i2: Tuple[DigitVec, ...]
    redundant: Tuple[DigitVec, ...]

    @property
    def f_value(self) -> int:
        return len(self.i1)


@dataclass(frozen=True)
class IndependenceVerdict:
    k: int
    independent: bool
    witness: Tuple[Term, ...] = ()

    def describe(self) -> str:
        if self.independent:
            return f"{self.k}-wise independent"
        terms = " + ".join(f"{coef}*{vec}" for coef, vec in self.witness)
        return f"dependent: {terms} = 0"


def band_parameter(r: int) -> int:
    if r < 3:
        raise UsageError(f"The I1 family needs index length r >= 3, got {r}.")
    if r == 3:
        return 2
    if r <= 7:
        return r // 2
    return (r + 1) // 2 - 1


def f_value(r: int) -> int:
    n = band_parameter(r)
    return sum(comb(r, i) for i in range(n, 2 * n))


def _uses_standard_case(r: int) -> bool:
    return r > 7 or r % 2 == 1


def _sum_elementary(r: int, lo: int, hi: int) -> DigitVec:
    digits = [0] * r
    for i in range(lo, hi + 1):
        digits[r - i] = 1
    return DigitVec(3, tuple(digits))


def _window_redundant(r: int) -> Tuple[DigitVec, ...]:
    n = band_parameter(r)
    result = []
    for j in range(1, r + 1):
        if _uses_standard_case(r):
            lo, hi = 1 + j // 2, n + (j + 1) // 2
        else:
            lo, hi = (j + 1) // 2, n + j // 2
        result.append(_sum_elementary(r, lo, hi))
    return tuple(result)


def uses_window_formula(r: int) -> bool:
    """True when the consecutive-window R_j are used as they stand."""
    return r != 3 and (r <= 7 or r % 2 == 1)


def _greedy_redundant(r: int, members: Sequence[DigitVec]) -> Tuple[DigitVec, ...]:
    chosen: List[DigitVec] = []
    for vec in members:
        if int(np.linalg.matrix_rank(_vector_matrix(chosen + [vec]))) == len(chosen) + 1:
            chosen.append(vec)
            if len(chosen) == r:
                break
    return tuple(chosen)


def redundant_indices(r: int) -> Tuple[DigitVec, ...]:
    """
    Ordered R_1..R_r, normally sums of consecutive elementary vectors.

    At r = 3 the window formula needs e_4, and for even r >= 8 its windows
    never reach e_r; those lengths take a fixed set (r = 3) or the first
    spanning members of I1 in index order.
    """
    if r == 3:
        return tuple(DigitVec.parse(text, 3) for text in ("011", "110", "111"))
    if uses_window_formula(r):
        return _window_redundant(r)
    return _greedy_redundant(r, _i1_members(r))


def _i1_members(r: int) -> List[DigitVec]:
    n = band_parameter(r)
    members = [DigitVec(3, digits) for digits in product((0, 1), repeat=r) if n <= sum(digits) <= 2 * n - 1]
    members.sort(key=lambda v: v.index)
    return members


@lru_cache(maxsize=None)
def build_family(r: int) -> WxliFamily:
    n = band_parameter(r)
    i1 = _i1_members(r)
    i2 = tuple(scalar_mul(2, v) for v in i1)
    family = WxliFamily(r=r, n=n, i1=tuple(i1), i2=i2, redundant=redundant_indices(r))
    logger.debug("Built I1 family r=%d n=%d f=%d", r, n, family.f_value)
    return family


def _vector_matrix(vectors: Sequence[DigitVec]):
    """Columns are the given vectors over GF(p)."""
    gf = galois.GF(vectors[0].base)
    return gf(np.array([v.digits for v in vectors], dtype=int).T)


def spans(vectors: Sequence[DigitVec]) -> bool:
    if not vectors:
        return False
    return int(np.linalg.matrix_rank(_vector_matrix(vectors))) == vectors[0].length


@lru_cache(maxsize=None)
def _coordinate_inverse(vectors: Tuple[DigitVec, ...]) -> np.ndarray:
    matrix = _vector_matrix(vectors)
    if matrix.shape[0] != matrix.shape[1] or int(np.linalg.matrix_rank(matrix)) != matrix.shape[0]:
        raise UsageError("Redundant indices must form a basis of the digit space.")
    return np.linalg.inv(matrix).view(np.ndarray).astype(int)


def coordinates(target: DigitVec, basis: Tuple[DigitVec, ...]) -> Tuple[int, ...]:
    """Coefficients c_j (mod p) with sum c_j * basis_j == target."""
    inv = _coordinate_inverse(basis)
    return tuple(int(c) for c in inv.dot(np.array(target.digits, dtype=int)) % target.base)


def decompose_elementary(family: WxliFamily) -> Dict[int, Tuple[int, ...]]:
    """e_i -> coefficients over R_1..R_r, solved as a linear system mod 3."""
    if not spans(family.redundant):
        raise UsageError(f"Redundant set for r={family.r} does not span.")
    r = family.r
    return {i: coordinates(DigitVec.elementary(3, r, i), family.redundant) for i in range(1, r + 1)}


def closed_form_elementary(r: int) -> Dict[int, Tuple[int, ...]]:
    """
    The explicit e_i identities over R for the standard and even cases.

    Returns an empty map where the window formula is not used.
    """
    if not uses_window_formula(r):
        return {}
    n = band_parameter(r)

    def unit(j: int) -> List[int]:
        coefs = [0] * r
        coefs[j - 1] = 1
        return coefs

    def diff(a: int, b: int) -> List[int]:
        return [(x - y) % 3 for x, y in zip(unit(a), unit(b))]

    forms: Dict[int, List[int]] = {}
    if _uses_standard_case(r):
        for i in range(1, n + 1):
            forms[i] = diff(2 * i - 1, 2 * i)
        for j in range(n + 2, r + 1):
            forms[j] = diff(2 * (j - (n + 1)) + 1, 2 * (j - (n + 1)))
        pivot, below = n + 1, range(1, n + 1)
    else:
        for i in range(1, n):
            forms[i] = diff(2 * i, 2 * i + 1)
        for j in range(n + 1, r + 1):
            forms[j] = diff(2 * (j - n), 2 * (j - n) - 1)
        pivot, below = n, range(1, n)
    rest = unit(1)
    for i in below:
        rest = [(x - y) % 3 for x, y in zip(rest, forms[i])]
    forms[pivot] = rest
    return {i: tuple(coefs) for i, coefs in forms.items()}


def _scan(members: Tuple[Tuple[int, ...], ...], p: int, w: int, first: Optional[int]):
    """
    Look for a weight-w dependency. The last member of each combination is
    found by lookup, so only w - 1 members are enumerated; `first` pins the
    first enumerated member when the scan is partitioned.
    """
    lookup: Dict[Tuple[int, ...], List[int]] = {}
    for j, vec in enumerate(members):
        lookup.setdefault(vec, []).append(j)
    r = len(members[0])
    inverses = {g: pow(g, p - 2, p) for g in range(1, p)}
    if w == 1:
        heads: Iterable[Tuple[int, ...]] = [()]
    elif first is None:
        heads = combinations(range(len(members)), w - 1)
    else:
        heads = ((first,) + rest for rest in combinations(range(first + 1, len(members)), w - 2))
    for head in heads:
        for coefs in product(range(1, p), repeat=len(head)):
            acc = [0] * r
            for coef, j in zip(coefs, head):
                for pos, d in enumerate(members[j]):
                    acc[pos] += coef * d
            need = tuple((-x) % p for x in acc)
            for gamma in range(1, p):
                candidate = tuple((inverses[gamma] * x) % p for x in need)
                for j in lookup.get(candidate, ()):
                    if not head or j > head[-1]:
                        return tuple(zip(coefs, head)) + ((gamma, j),)
    return None


def _scan_task(args):
    return _scan(*args)


def search_weight(
    members: Tuple[Tuple[int, ...], ...], p: int, w: int, workers: Optional[int] = None
) -> Optional[Tuple[Tuple[int, int], ...]]:
    """
    One weight-w dependency among raw digit tuples as (coefficient, member
    offset) pairs, or None. Repeated members are allowed.
    """
    pool_size = resolve_workers(workers)
    if pool_size > 1 and w >= 2:
        tasks = [(members, p, w, first) for first in range(len(members))]
        with Pool(processes=pool_size) as pool:
            found = pool.map(_scan_task, tasks)
        return next((item for item in found if item is not None), None)
    return _scan(members, p, w, None)


def find_dependency(
    vectors: Sequence[DigitVec], k: int, min_weight: int = 1, workers: Optional[int] = None
) -> Optional[Tuple[Term, ...]]:
    """Lowest-weight combination of at most k members summing to zero, or None."""
    members = list(dict.fromkeys(vectors))
    if not members:
        raise UsageError("Cannot test an empty set.")
    p, r = members[0].base, members[0].length
    for vec in members:
        if vec.base != p or vec.length != r:
            raise UsageError("All members must share base and length.")
    raw = tuple(vec.digits for vec in members)
    for w in range(min_weight, k + 1):
        hit = search_weight(raw, p, w, workers)
        if hit is not None:
            return tuple((coef, members[j]) for coef, j in hit)
    return None


def is_kwise_independent(
    vectors: Sequence[DigitVec], k: int, workers: Optional[int] = None
) -> IndependenceVerdict:
    distinct = len(set(vectors))
    if not 1 <= k <= distinct:
        raise UsageError(f"k must lie in [1, {distinct}], got {k}.")
    witness = find_dependency(vectors, k, workers=workers)
    if witness is None:
        return IndependenceVerdict(k, True)
    return IndependenceVerdict(k, False, witness)


def witness_sum(witness: Sequence[Term]) -> DigitVec:
    first = witness[0][1]
    total = DigitVec.zero(first.base, first.length)
    for coef, vec in witness:
        total = total + scalar_mul(coef, vec)
    return total


def certified_order(vectors: Sequence[DigitVec], k_max: int, workers: Optional[int] = None) -> int:
    """Largest k <= k_max for which the set is k-wise independent."""
    k_max = min(k_max, len(set(vectors)))
    witness = find_dependency(vectors, k_max, workers=workers)
    return k_max if witness is None else len(witness) - 1


def certify_family(
    r: int, long_running: bool = False, workers: Optional[int] = None
) -> Tuple[IndependenceVerdict, IndependenceVerdict]:
    """3-wise verdicts for I1 and I2 of the length-r family."""
    if r > Config.ECC_CERTIFY_MAX_R and not long_running:
        raise BudgetError(
            f"Exhaustive certification above r={Config.ECC_CERTIFY_MAX_R} is long-running; "
            f"pass the long-running flag to proceed."
        )
    family = build_family(r)
    logger.info("Certifying I1/I2 for r=%d (%d members each)", r, family.f_value)
    return (
        is_kwise_independent(family.i1, 3, workers=workers),
        is_kwise_independent(family.i2, 3, workers=workers),
    )
