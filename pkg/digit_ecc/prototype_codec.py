"""
Prototype SEC-DED code [p^r, p^r - r - 1, 3]_p.

Every index 0..p^r-1 is a position. Index 0 and the powers p^i hold
redundancy; the r digit checks weight each value by one base-p digit of
its index and the global check sums all values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

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
from digit_ecc.digit_arith import (
    DigitVec,
    index_to_vec,
    inverse,
    require_prime,
    solve_unique,
    weighted_sum,
)
from digit_ecc.errors import CapacityError, DomainError, UsageError


@dataclass
class AddCounter:
    """Counts symbol additions performed during syndrome evaluation."""

    adds: int = 0


@dataclass(frozen=True)
class PrototypeSyndromes:
    # S_{r-1}..S_0, most significant digit first like every DigitVec
    digit_syndromes: DigitVec
    global_sum: int

    def is_zero(self) -> bool:
        return self.global_sum == 0 and self.digit_syndromes.is_zero()


def build_prototype_spec(p: int, r: int) -> CodeSpec:
    require_prime(p)
    if r < 1:
        raise UsageError(f"Index length must be at least 1, got {r}.")
    if p ** r - r - 1 < 1:
        raise CapacityError(f"Prototype p={p} r={r} leaves no message positions.")
    redundant = {0} | {p ** i for i in range(r)}
    positions = tuple(
        Position(Role.REDUNDANT if i in redundant else Role.MESSAGE, index_to_vec(i, p, r))
        for i in range(p ** r)
    )
    return CodeSpec(Family.PROTOTYPE, p, r, 3, positions, name="prototype")


def message_xor_sum(spec: CodeSpec, message: Sequence[int]) -> DigitVec:
    """P_message: index-weighted XOR sum of the message values."""
    symbols = place_message(spec, message)
    return weighted_sum(
        ((symbols[slot], spec.active_positions[slot].index) for slot in spec.message_order),
        spec.base,
        spec.r,
    )


def encode(spec: CodeSpec, message: Sequence[int]) -> Codeword:
    _require_family(spec)
    p, r = spec.base, spec.r
    symbols = place_message(spec, message)
    target = inverse(message_xor_sum(spec, message))
    # p^j carries a single 1 in digit j, so it alone fixes digit check j
    for j in range(r):
        symbols[p ** j] = target.digit(j)
    symbols[0] = (-sum(symbols)) % p
    return Codeword(spec, tuple(symbols))


def compute_syndromes(
    spec: CodeSpec, word: Codeword, counter: Optional[AddCounter] = None
) -> PrototypeSyndromes:
    _require_family(spec)
    p, r = spec.base, spec.r
    counter = counter if counter is not None else AddCounter()
    digit_sums = [0] * r
    total = 0
    for pos, value in zip(spec.active_positions, word.symbols):
        total += value
        counter.adds += 1
        for j, d in enumerate(pos.index.digits):
            digit_sums[j] += d * value
            counter.adds += 1
    return PrototypeSyndromes(DigitVec(p, tuple(s % p for s in digit_sums)), total % p)


def decode(spec: CodeSpec, word: Codeword) -> Tuple[DecodeOutcome, Codeword]:
    syndromes = compute_syndromes(spec, word)
    if syndromes.is_zero():
        return DecodeOutcome.clean(), word
    delta = syndromes.global_sum
    if delta == 0:
        # Digit checks fired but the value sum did not: no single error does this
        return DecodeOutcome.detected(), word
    location = locate(syndromes.digit_syndromes, delta)
    outcome = DecodeOutcome.single(spec, location.index, delta)
    return outcome, apply_corrections(word, outcome)


def locate(digit_syndromes: DigitVec, delta: int) -> DigitVec:
    """Error index from S_j = digit_j(E) * delta."""
    p = digit_syndromes.base
    return DigitVec(p, tuple(solve_unique(delta, s, p) if s else 0 for s in digit_syndromes.digits))


def extract_message(spec: CodeSpec, word: Codeword) -> Tuple[int, ...]:
    _require_family(spec)
    return read_message(word)


def weight3_codeword(spec: CodeSpec, u: DigitVec) -> Codeword:
    """Weight-3 codeword with ones at u, u + (1..1) and u + (2..2)."""
    _require_family(spec)
    if spec.base != 3:
        raise DomainError(f"The weight-3 construction is ternary only, got base {spec.base}.")
    if u.base != 3 or u.length != spec.r:
        raise UsageError(f"Anchor {u} does not match length {spec.r}.")
    symbols = [0] * spec.n_block
    for shift in range(3):
        symbols[(u + DigitVec(3, (shift,) * spec.r)).index] = 1
    return Codeword(spec, tuple(symbols))


def _require_family(spec: CodeSpec):
    if spec.family is not Family.PROTOTYPE:
        raise UsageError(f"{spec.label} is not a prototype layout.")
