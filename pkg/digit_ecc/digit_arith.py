"""
Base-p digit-vector arithmetic.

A DigitVec is a fixed-length vector of base-p digits written most
significant first ("0121" is the index 0*27 + 1*9 + 2*3 + 1). Addition is
digitwise mod p without carries, which turns the vectors into an
elementary abelian group; the codes in this package use them as position
indices, syndrome values and group elements at the same time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Sequence, Tuple

from digit_ecc.errors import DataError, DomainError, UsageError

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    factor = 2
    while factor * factor <= p:
        if p % factor == 0:
            return False
        factor += 1
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise UsageError(f"Base must be a prime integer, got {p!r}.")
    return p


def digit_char(value: int) -> str:
    return _DIGIT_CHARS[value]


def char_digit(char: str, p: int) -> int:
    value = _DIGIT_CHARS.find(char.lower()) if len(char) == 1 else -1
    if value < 0 or value >= p:
        raise DataError(f"'{char}' is not a base-{p} digit.")
    return value


@dataclass(frozen=True)
class DigitVec:
    base: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        require_prime(self.base)
        digits = tuple(int(d) for d in self.digits)
        if not digits:
            raise UsageError("A digit vector needs at least one digit.")
        for d in digits:
            if not 0 <= d < self.base:
                raise DataError(f"Digit {d} is outside [0, {self.base}).")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def zero(cls, p: int, r: int) -> "DigitVec":
        return cls(p, (0,) * r)

    @classmethod
    def parse(cls, text: str, p: int) -> "DigitVec":
        stripped = text.strip()
        if not stripped:
            raise DataError("Empty digit vector.")
        return cls(p, tuple(char_digit(c, p) for c in stripped))

    @classmethod
    def elementary(cls, p: int, r: int, i: int) -> "DigitVec":
        """e_i with a 1 in the i-th least significant digit (i counts from 1)."""
        if not 1 <= i <= r:
            raise UsageError(f"Elementary vector e_{i} does not exist for length {r}.")
        digits = [0] * r
        digits[r - i] = 1
        return cls(p, tuple(digits))

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def index(self) -> int:
        return vec_to_index(self)

    def is_zero(self) -> bool:
        return not any(self.digits)

    def weight(self) -> int:
        return sum(1 for d in self.digits if d)

    def leading_digit(self) -> int:
        """Most significant nonzero digit, 0 for the zero vector."""
        for d in self.digits:
            if d:
                return d
        return 0

    def digit(self, position: int) -> int:
        """Digit at `position` counted from the least significant end (0-based)."""
        return self.digits[self.length - 1 - position]

    def __add__(self, other: "DigitVec") -> "DigitVec":
        return xor_add(self, other)

    def __sub__(self, other: "DigitVec") -> "DigitVec":
        return xor_add(self, inverse(other))

    def __neg__(self) -> "DigitVec":
        return inverse(self)

    def __rmul__(self, k: int) -> "DigitVec":
        return scalar_mul(k, self)

    def __str__(self) -> str:
        return "".join(digit_char(d) for d in self.digits)


def _check_compatible(a: DigitVec, b: DigitVec):
    if a.base != b.base or a.length != b.length:
        raise UsageError(
            f"Cannot combine base-{a.base} length-{a.length} vector "
            f"with base-{b.base} length-{b.length} vector."
        )


def xor_add(a: DigitVec, b: DigitVec) -> DigitVec:
    _check_compatible(a, b)
    p = a.base
    return DigitVec(p, tuple((x + y) % p for x, y in zip(a.digits, b.digits)))


def scalar_mul(k: int, a: DigitVec) -> DigitVec:
    if k < 0:
        raise UsageError(f"Scalar must be non-negative, got {k}.")
    p = a.base
    return DigitVec(p, tuple((k * d) % p for d in a.digits))


def inverse(a: DigitVec) -> DigitVec:
    p = a.base
    return DigitVec(p, tuple((p - d) % p for d in a.digits))


def xor_sum(vectors: Iterable[DigitVec], p: int, r: int) -> DigitVec:
    return reduce(xor_add, vectors, DigitVec.zero(p, r))


def weighted_sum(terms: Iterable[Tuple[int, DigitVec]], p: int, r: int) -> DigitVec:
    """XOR-sum of value * index over (value, index) pairs."""
    acc = [0] * r
    for value, vec in terms:
        if value:
            for pos, d in enumerate(vec.digits):
                acc[pos] += value * d
    return DigitVec(p, tuple(x % p for x in acc))


def solve_unique(z: int, y: int, p: int) -> int:
    """The unique l in [1, p) with (l * z) mod p == y, for prime p."""
    require_prime(p)
    if not 0 < z < p or not 0 < y < p:
        raise DomainError(f"solve_unique needs residues in [1, {p}), got z={z}, y={y}.")
    # z is a unit mod p, so l = y * z^(p-2) by Fermat
    return (y * pow(z, p - 2, p)) % p


def index_to_vec(i: int, p: int, r: int) -> DigitVec:
    require_prime(p)
    if not 0 <= i < p ** r:
        raise UsageError(f"Index {i} is outside [0, {p}^{r}).")
    digits = []
    for _ in range(r):
        i, d = divmod(i, p)
        digits.append(d)
    return DigitVec(p, tuple(reversed(digits)))


def vec_to_index(v: DigitVec) -> int:
    value = 0
    for d in v.digits:
        value = value * v.base + d
    return value


def parse_digits(text: str, p: int) -> Tuple[int, ...]:
    """Parse a contiguous digit string into residues mod p."""
    return tuple(char_digit(c, p) for c in text.strip())


def format_digits(values: Sequence[int]) -> str:
    return "".join(digit_char(v) for v in values)
