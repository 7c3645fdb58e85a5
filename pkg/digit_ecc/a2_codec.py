"""
A2 ternary SEC-TED codes built on the 3-wise independent family I1.

Full A2 [2f(r)+2, 2f(r)-r, 4]_3 places symbols at I1, at I2 = 2*I1 and at
two index-less adjust positions O and E that zero the value sums of the
two groups. The sparse variant [f(r), f(r)-r, 4]_3 keeps I1 only and can
optionally append a global value-sum position G.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from digit_ecc.code_model import (
    MARKER_EVEN,
    MARKER_GLOBAL,
    MARKER_ODD,
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
from digit_ecc.errors import CapacityError, UsageError
from digit_ecc.wxli_sets import build_family, coordinates, f_value

logger = logging.getLogger(__name__)

TIGHT_PAIR_MESSAGES = ("0211001022101122", "0021021022001122")


@dataclass(frozen=True)
class A2Syndromes:
    p1: int
    p2: int
    p_all: DigitVec

    def is_zero(self) -> bool:
        return self.p1 == 0 and self.p2 == 0 and self.p_all.is_zero()

    def describe(self) -> str:
        return f"P1={self.p1} P2={self.p2} P_all={self.p_all}"


@dataclass(frozen=True)
class SparseSyndromes:
    idx_xor: DigitVec
    # None unless the layout carries the global value-sum position
    value: Optional[int] = None

    def is_zero(self) -> bool:
        return self.idx_xor.is_zero() and not self.value

    def describe(self) -> str:
        if self.value is None:
            return f"S_idxXor={self.idx_xor}"
        return f"S_idxXor={self.idx_xor} S_value={self.value}"


def full_capacity(r: int) -> int:
    return 2 * f_value(r) - r


def sparse_capacity(r: int) -> int:
    return f_value(r) - r


def choose_a2_r(message_len: int) -> int:
    """Smallest r >= 3 whose full A2 layout holds message_len digits."""
    if message_len < 1:
        raise UsageError(f"Message length must be at least 1, got {message_len}.")
    r = 3
    while full_capacity(r) < message_len:
        r += 1
    if message_len < sparse_capacity(r):
        raise CapacityError(
            f"No A2 layout holds {message_len} digits: r={r - 1} stops at "
            f"{full_capacity(r - 1)} and r={r} needs at least {sparse_capacity(r)}."
        )
    return r


def choose_sparse_r(message_len: int) -> int:
    if message_len < 1:
        raise UsageError(f"Message length must be at least 1, got {message_len}.")
    r = 3
    while sparse_capacity(r) < message_len:
        r += 1
    return r


def build_a2_spec(r: int, message_len: Optional[int] = None) -> CodeSpec:
    if r < 3:
        raise UsageError(f"A2 needs index length r >= 3, got {r}.")
    family = build_family(r)
    capacity = full_capacity(r)
    if message_len is None:
        message_len = capacity
    if message_len > capacity:
        raise CapacityError(f"A2 with r={r} holds at most {capacity} message digits, got {message_len}.")
    if message_len < sparse_capacity(r):
        raise CapacityError(
            f"A2 with r={r} can only banish I2 indices; messages need at least "
            f"{sparse_capacity(r)} digits, got {message_len}."
        )
    redundant = set(family.redundant)
    # E is never banished, only the highest I2 indices
    i2 = sorted(family.i2, key=lambda v: v.index)
    banished = set(i2[len(i2) - (capacity - message_len):])
    positions = []
    for vec in sorted(family.i1 + family.i2, key=lambda v: v.index):
        group = 1 if vec in family.i1 else 2
        if vec in redundant:
            role = Role.REDUNDANT
        elif vec in banished:
            role = Role.BANISHED
        else:
            role = Role.MESSAGE
        positions.append(Position(role, vec, group=group))
    positions.append(Position(Role.SPECIAL, marker=MARKER_ODD, group=1))
    positions.append(Position(Role.SPECIAL, marker=MARKER_EVEN, group=2))
    spec = CodeSpec(Family.A2, 3, r, 4, tuple(positions), name="A2")
    logger.debug("Built %s with %d banished indices", spec.label, len(banished))
    return spec


def build_sparse_spec(r: int, message_len: Optional[int] = None, global_check: bool = False) -> CodeSpec:
    if r < 3:
        raise UsageError(f"A2 sparse needs index length r >= 3, got {r}.")
    family = build_family(r)
    capacity = sparse_capacity(r)
    if message_len is None:
        message_len = capacity
    if not 1 <= message_len <= capacity:
        raise CapacityError(f"A2 sparse with r={r} holds 1..{capacity} message digits, got {message_len}.")
    redundant = set(family.redundant)
    candidates = [vec for vec in family.i1 if vec not in redundant]
    banished = set(candidates[message_len:])
    positions = []
    for vec in family.i1:
        if vec in redundant:
            role = Role.REDUNDANT
        elif vec in banished:
            role = Role.BANISHED
        else:
            role = Role.MESSAGE
        positions.append(Position(role, vec, group=1))
    if global_check:
        positions.append(Position(Role.SPECIAL, marker=MARKER_GLOBAL))
    return CodeSpec(Family.A2_SPARSE, 3, r, 4, tuple(positions), global_check=global_check, name="A2sparse")


def _index_xor(spec: CodeSpec, symbols: Sequence[int]) -> DigitVec:
    return weighted_sum(
        (
            (value, pos.index)
            for pos, value in zip(spec.active_positions, symbols)
            if pos.index is not None
        ),
        3,
        spec.r,
    )


def _fill_redundant(spec: CodeSpec, symbols: list):
    """Set the R values so the index-weighted XOR sum vanishes."""
    family = build_family(spec.r)
    target = inverse(_index_xor(spec, symbols))
    for vec, value in zip(family.redundant, coordinates(target, family.redundant)):
        symbols[spec.slot_of_index(vec)] = value


def message_xor_sum(spec: CodeSpec, message: Sequence[int]) -> DigitVec:
    return _index_xor(spec, place_message(spec, message))


def encode(spec: CodeSpec, message: Sequence[int]) -> Codeword:
    _require_family(spec, Family.A2)
    symbols = place_message(spec, message)
    _fill_redundant(spec, symbols)
    for marker, group in ((MARKER_ODD, 1), (MARKER_EVEN, 2)):
        total = sum(
            value
            for pos, value in zip(spec.active_positions, symbols)
            if pos.group == group and pos.index is not None
        )
        symbols[spec.slot_of(marker)] = (-total) % 3
    return Codeword(spec, tuple(symbols))


def compute_syndromes(spec: CodeSpec, word: Codeword) -> A2Syndromes:
    _require_family(spec, Family.A2)
    sums = {1: 0, 2: 0}
    for pos, value in zip(spec.active_positions, word.symbols):
        sums[pos.group] += value
    return A2Syndromes(sums[1] % 3, sums[2] % 3, _index_xor(spec, word.symbols))


def _member_slot(spec: CodeSpec, vec: DigitVec, group: int) -> Optional[int]:
    slot = spec.slot_of_index(vec)
    if slot is None or spec.active_positions[slot].group != group:
        return None
    return slot


def decode(spec: CodeSpec, word: Codeword) -> Tuple[DecodeOutcome, Codeword]:
    syn = compute_syndromes(spec, word)
    if syn.is_zero():
        return DecodeOutcome.clean(), word
    if syn.p1 and syn.p2:
        return DecodeOutcome.detected(), word
    if syn.p_all.is_zero():
        # only an adjust position moves a group sum without touching P_all
        if syn.p1:
            slot, delta = spec.slot_of(MARKER_ODD), syn.p1
        else:
            slot, delta = spec.slot_of(MARKER_EVEN), syn.p2
    else:
        if not (syn.p1 or syn.p2):
            return DecodeOutcome.detected(), word
        group, delta = (1, syn.p1) if syn.p1 else (2, syn.p2)
        slot = _member_slot(spec, scalar_mul(delta, syn.p_all), group)
        if slot is None:
            return DecodeOutcome.detected(), word
    outcome = DecodeOutcome.single(spec, slot, delta)
    return outcome, apply_corrections(word, outcome)


def sparse_encode(spec: CodeSpec, message: Sequence[int]) -> Codeword:
    _require_family(spec, Family.A2_SPARSE)
    symbols = place_message(spec, message)
    _fill_redundant(spec, symbols)
    if spec.global_check:
        symbols[spec.slot_of(MARKER_GLOBAL)] = (-sum(symbols)) % 3
    return Codeword(spec, tuple(symbols))


def sparse_compute_syndromes(spec: CodeSpec, word: Codeword) -> SparseSyndromes:
    _require_family(spec, Family.A2_SPARSE)
    value = sum(word.symbols) % 3 if spec.global_check else None
    return SparseSyndromes(_index_xor(spec, word.symbols), value)


def sparse_decode(spec: CodeSpec, word: Codeword) -> Tuple[DecodeOutcome, Codeword]:
    syn = sparse_compute_syndromes(spec, word)
    if syn.is_zero():
        return DecodeOutcome.clean(), word
    if spec.global_check:
        if syn.idx_xor.is_zero():
            slot, delta = spec.slot_of(MARKER_GLOBAL), syn.value
        elif not syn.value:
            return DecodeOutcome.detected(), word
        else:
            delta = syn.value
            slot = _member_slot(spec, scalar_mul(delta, syn.idx_xor), 1)
    else:
        delta = 1
        slot = _member_slot(spec, syn.idx_xor, 1)
        if slot is None:
            delta = 2
            slot = _member_slot(spec, scalar_mul(2, syn.idx_xor), 1)
    if slot is None:
        return DecodeOutcome.detected(), word
    outcome = DecodeOutcome.single(spec, slot, delta)
    return outcome, apply_corrections(word, outcome)


def extract_message(spec: CodeSpec, word: Codeword) -> Tuple[int, ...]:
    if spec.family not in (Family.A2, Family.A2_SPARSE):
        raise UsageError(f"{spec.label} is not an A2 layout.")
    return read_message(word)


def tight_pair() -> Tuple[Codeword, Codeword]:
    """Two r=4 A2 codewords at Hamming distance exactly 4."""
    spec = build_a2_spec(4)
    return tuple(encode(spec, [int(c) for c in text]) for text in TIGHT_PAIR_MESSAGES)


def _require_family(spec: CodeSpec, family: Family):
    if spec.family is not family:
        raise UsageError(f"{spec.label} is not a {family.value} layout.")
