"""
A1 adaptive-length ternary SEC-DED code [(3^r-1)/2, (3^r-1)/2 - r, 3]_3.

Of every inverse pair {v, 2v} only the member whose leading nonzero digit
is 1 is kept, so a single error's syndrome names its position up to the
factor that the leading digit reveals. Short messages leave the highest
kept indices banished.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

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
from digit_ecc.digit_arith import DigitVec, index_to_vec, inverse, scalar_mul, weighted_sum
from digit_ecc.errors import CapacityError, UsageError


@dataclass(frozen=True)
class A1Layout:
    r: int
    m: int
    spec: CodeSpec

    @property
    def kept(self) -> Tuple[DigitVec, ...]:
        return tuple(pos.index for pos in self.spec.positions)

    @property
    def redundant(self) -> Tuple[DigitVec, ...]:
        return tuple(pos.index for pos in self.spec.positions if pos.role is Role.REDUNDANT)

    @property
    def active_message(self) -> Tuple[DigitVec, ...]:
        return tuple(pos.index for pos in self.spec.positions if pos.role is Role.MESSAGE)

    @property
    def banished(self) -> Tuple[DigitVec, ...]:
        return tuple(pos.index for pos in self.spec.banished)


def g_capacity(r: int) -> int:
    return (3 ** r - 1) // 2 - r


def is_kept(v: DigitVec) -> bool:
    return v.leading_digit() == 1


def choose_r(m: int) -> int:
    if m < 1:
        raise UsageError(f"Message length must be at least 1, got {m}.")
    r = 1
    while g_capacity(r) < m:
        r += 1
    return r


def build_a1_layout(r: int | None = None, m: int | None = None) -> A1Layout:
    """Layout for index length r holding m message digits (either may be derived)."""
    if r is None and m is None:
        raise UsageError("A1 needs an index length or a message length.")
    if r is None:
        r = choose_r(m)
    if r < 2:
        raise UsageError(f"A1 needs index length r >= 2, got {r}.")
    capacity = g_capacity(r)
    if m is None:
        m = capacity
    if not 1 <= m <= capacity:
        raise CapacityError(f"A1 with r={r} holds 1..{capacity} message digits, got {m}.")
    redundant = {3 ** i for i in range(r)}
    positions = []
    filled = 0
    for i in range(1, 3 ** r):
        v = index_to_vec(i, 3, r)
        if not is_kept(v):
            continue
        if i in redundant:
            role = Role.REDUNDANT
        elif filled < m:
            role = Role.MESSAGE
            filled += 1
        else:
            role = Role.BANISHED
        positions.append(Position(role, v))
    spec = CodeSpec(Family.A1, 3, r, 3, tuple(positions), name="A1")
    return A1Layout(r=r, m=m, spec=spec)


def layout_of(spec: CodeSpec) -> A1Layout:
    if spec.family is not Family.A1:
        raise UsageError(f"{spec.label} is not an A1 layout.")
    return A1Layout(r=spec.r, m=spec.k_msg, spec=spec)


def xor_sum(spec: CodeSpec, symbols: Sequence[int]) -> DigitVec:
    return weighted_sum(
        ((value, pos.index) for pos, value in zip(spec.active_positions, symbols)), 3, spec.r
    )


def message_xor_sum(layout: A1Layout, message: Sequence[int]) -> DigitVec:
    return xor_sum(layout.spec, place_message(layout.spec, message))


def encode(layout: A1Layout, message: Sequence[int]) -> Codeword:
    spec = layout.spec
    symbols = place_message(spec, message)
    target = inverse(xor_sum(spec, symbols))
    for j in range(layout.r):
        symbols[spec.slot_of_index(index_to_vec(3 ** j, 3, layout.r))] = target.digit(j)
    return Codeword(spec, tuple(symbols))


def decode(layout: A1Layout, word: Codeword) -> Tuple[DecodeOutcome, Codeword]:
    spec = layout.spec
    syndrome = xor_sum(spec, word.symbols)
    if syndrome.is_zero():
        return DecodeOutcome.clean(), word
    if syndrome.leading_digit() == 1:
        candidate, delta = syndrome, 1
    else:
        candidate, delta = scalar_mul(2, syndrome), 2
    slot = spec.slot_of_index(candidate)
    if slot is None:
        # banished: no symbol exists there, so this is not a single error
        return DecodeOutcome.detected(), word
    outcome = DecodeOutcome.single(spec, slot, delta)
    return outcome, apply_corrections(word, outcome)


def extract_message(layout: A1Layout, word: Codeword) -> Tuple[int, ...]:
    return read_message(word)
