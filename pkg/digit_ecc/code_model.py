"""
Code-instance description shared by every codec.

A CodeSpec lists every position of a layout in canonical serialization
order, banished positions included, so a spec alone is enough to build a
check matrix, parse a word or print a layout. Codewords only carry the
symbols of the non-banished positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from digit_ecc.digit_arith import DigitVec, char_digit, format_digits
from digit_ecc.errors import DataError, UsageError


class Family(str, Enum):
    PROTOTYPE = "prototype"
    A1 = "a1"
    A2 = "a2"
    A2_SPARSE = "a2sparse"
    NWXLI = "nwxli"


class Role(str, Enum):
    MESSAGE = "message"
    REDUNDANT = "redundant"
    SPECIAL = "special"
    BANISHED = "banished"


# Special markers: odd adjust, even adjust, global value sum
MARKER_ODD = "O"
MARKER_EVEN = "E"
MARKER_GLOBAL = "G"


@dataclass(frozen=True)
class Position:
    role: Role
    index: Optional[DigitVec] = None
    marker: Optional[str] = None
    # A2 index group (1 for I1 and O, 2 for I2 and E); 0 elsewhere
    group: int = 0

    def __post_init__(self):
        if (self.index is None) == (self.marker is None):
            raise UsageError("A position needs exactly one of an index or a special marker.")

    @property
    def label(self) -> str:
        return self.marker if self.marker is not None else str(self.index)

    @property
    def active(self) -> bool:
        return self.role is not Role.BANISHED


@dataclass(frozen=True)
class CodeSpec:
    family: Family
    base: int
    r: int
    distance: int
    positions: Tuple[Position, ...]
    # Message fill order as offsets into the active positions; ascending
    # index unless a family declares otherwise
    message_order: Tuple[int, ...] = ()
    global_check: bool = False
    name: str = ""

    _active: Tuple[Position, ...] = field(default=(), init=False, repr=False, compare=False)
    _slots: Dict[str, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        active = tuple(pos for pos in self.positions if pos.active)
        slots = {pos.label: slot for slot, pos in enumerate(active)}
        if len(slots) != len(active):
            raise UsageError("Position labels must be unique within a layout.")
        object.__setattr__(self, "_active", active)
        object.__setattr__(self, "_slots", slots)
        if not self.message_order:
            order = tuple(
                slot for slot, pos in sorted(
                    ((slot, pos) for slot, pos in enumerate(active) if pos.role is Role.MESSAGE),
                    key=lambda item: item[1].index.index,
                )
            )
            object.__setattr__(self, "message_order", order)
        elif sorted(self.message_order) != sorted(
            slot for slot, pos in enumerate(active) if pos.role is Role.MESSAGE
        ):
            raise UsageError("Message order must list every message position exactly once.")

    @property
    def active_positions(self) -> Tuple[Position, ...]:
        return self._active

    @property
    def n_block(self) -> int:
        return len(self._active)

    @property
    def k_msg(self) -> int:
        return len(self.message_order)

    @property
    def parameters(self) -> str:
        return f"[{self.n_block},{self.k_msg},{self.distance}]_{self.base}"

    @property
    def label(self) -> str:
        prefix = self.name or self.family.value
        return f"{prefix}{self.parameters}"

    @property
    def banished(self) -> Tuple[Position, ...]:
        return tuple(pos for pos in self.positions if not pos.active)

    def slot_of(self, label: str) -> Optional[int]:
        """Serialization slot of an active position, None if absent or banished."""
        return self._slots.get(label)

    def slot_of_index(self, index: DigitVec) -> Optional[int]:
        return self._slots.get(str(index))

    def slots_with_role(self, role: Role) -> List[int]:
        return [slot for slot, pos in enumerate(self._active) if pos.role is role]

    def zero_word(self) -> "Codeword":
        return Codeword(self, (0,) * self.n_block)


@dataclass(frozen=True)
class Codeword:
    spec: CodeSpec
    symbols: Tuple[int, ...]

    def __post_init__(self):
        symbols = tuple(int(v) for v in self.symbols)
        if len(symbols) != self.spec.n_block:
            raise DataError(
                f"Word has {len(symbols)} symbols, {self.spec.label} needs {self.spec.n_block}."
            )
        p = self.spec.base
        for value in symbols:
            if not 0 <= value < p:
                raise DataError(f"Symbol {value} is outside [0, {p}).")
        object.__setattr__(self, "symbols", symbols)

    def __str__(self) -> str:
        return serialize(self)

    def value_at(self, label: str) -> int:
        slot = self.spec.slot_of(label)
        if slot is None:
            raise UsageError(f"{self.spec.label} has no active position {label}.")
        return self.symbols[slot]

    def weight(self) -> int:
        return sum(1 for v in self.symbols if v)

    def distance_to(self, other: "Codeword") -> int:
        return sum(1 for a, b in zip(self.symbols, other.symbols) if a != b)

    def add_error(self, errors: Iterable[Tuple[int, int]]) -> "Codeword":
        """Add (slot, offset) pairs mod p."""
        p = self.spec.base
        symbols = list(self.symbols)
        for slot, offset in errors:
            symbols[slot] = (symbols[slot] + offset) % p
        return Codeword(self.spec, tuple(symbols))


class OutcomeKind(str, Enum):
    CLEAN = "clean"
    CORRECTED_SINGLE = "corrected_single"
    CORRECTED_MULTI = "corrected_multi"
    DETECTED_MULTIPLE = "detected_multiple"


STATUS_TEXT = {
    OutcomeKind.CLEAN: "CLEAN",
    OutcomeKind.CORRECTED_SINGLE: "CORRECTED",
    OutcomeKind.CORRECTED_MULTI: "CORRECTED",
    OutcomeKind.DETECTED_MULTIPLE: "MULTI",
}


@dataclass(frozen=True)
class Correction:
    slot: int
    label: str
    # Residue subtracted from the received symbol
    delta: int


@dataclass(frozen=True)
class DecodeOutcome:
    kind: OutcomeKind
    corrections: Tuple[Correction, ...] = ()

    def __post_init__(self):
        if self.kind is OutcomeKind.CORRECTED_SINGLE:
            if len(self.corrections) != 1 or self.corrections[0].delta == 0:
                raise UsageError("A single correction needs exactly one nonzero delta.")
        elif self.kind is OutcomeKind.CORRECTED_MULTI:
            slots = [c.slot for c in self.corrections]
            if not slots or len(set(slots)) != len(slots):
                raise UsageError("A multi correction needs distinct positions.")
            if any(c.delta == 0 for c in self.corrections):
                raise UsageError("Correction deltas must be nonzero.")
        elif self.corrections:
            raise UsageError(f"{self.kind.value} outcomes carry no corrections.")

    @classmethod
    def clean(cls) -> "DecodeOutcome":
        return cls(OutcomeKind.CLEAN)

    @classmethod
    def detected(cls) -> "DecodeOutcome":
        return cls(OutcomeKind.DETECTED_MULTIPLE)

    @classmethod
    def single(cls, spec: CodeSpec, slot: int, delta: int) -> "DecodeOutcome":
        label = spec.active_positions[slot].label
        return cls(OutcomeKind.CORRECTED_SINGLE, (Correction(slot, label, delta % spec.base),))

    @classmethod
    def multi(cls, spec: CodeSpec, fixes: Sequence[Tuple[int, int]]) -> "DecodeOutcome":
        corrections = tuple(
            Correction(slot, spec.active_positions[slot].label, delta % spec.base)
            for slot, delta in sorted(fixes)
        )
        return cls(OutcomeKind.CORRECTED_MULTI, corrections)

    @property
    def status(self) -> str:
        return STATUS_TEXT[self.kind]

    @property
    def is_corrected(self) -> bool:
        return self.kind in (OutcomeKind.CORRECTED_SINGLE, OutcomeKind.CORRECTED_MULTI)

    def detail(self) -> str:
        if not self.corrections:
            return "-"
        return ",".join(f"{c.label}:-{c.delta}" for c in self.corrections)


def apply_corrections(word: Codeword, outcome: DecodeOutcome) -> Codeword:
    p = word.spec.base
    return word.add_error((c.slot, p - c.delta) for c in outcome.corrections)


def serialize(word: Codeword) -> str:
    return format_digits(word.symbols)


def parse(spec: CodeSpec, line: str) -> Codeword:
    text = line.strip()
    if len(text) != spec.n_block:
        raise DataError(f"Expected {spec.n_block} digits for {spec.label}, got {len(text)}.")
    return Codeword(spec, tuple(char_digit(c, spec.base) for c in text))


def parse_message(spec: CodeSpec, line: str) -> Tuple[int, ...]:
    text = line.strip()
    if len(text) != spec.k_msg:
        raise DataError(f"Expected {spec.k_msg} message digits for {spec.label}, got {len(text)}.")
    return tuple(char_digit(c, spec.base) for c in text)


def check_message(spec: CodeSpec, message: Sequence[int]) -> Tuple[int, ...]:
    values = tuple(int(v) for v in message)
    if len(values) != spec.k_msg:
        raise DataError(f"Message has {len(values)} digits, {spec.label} needs {spec.k_msg}.")
    for value in values:
        if not 0 <= value < spec.base:
            raise DataError(f"Message digit {value} is outside [0, {spec.base}).")
    return values


def place_message(spec: CodeSpec, message: Sequence[int]) -> List[int]:
    """Active-slot symbol list with the message filled in and zeros elsewhere."""
    values = check_message(spec, message)
    symbols = [0] * spec.n_block
    for slot, value in zip(spec.message_order, values):
        symbols[slot] = value
    return symbols


def read_message(word: Codeword) -> Tuple[int, ...]:
    return tuple(word.symbols[slot] for slot in word.spec.message_order)
