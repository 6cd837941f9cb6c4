"""Binary vectors, bit-packed truth tables and ANF polynomials over F_2.

A vector ``x = (x_0, ..., x_{n-1})`` is identified with the integer
``sum(x_i << i)``; coordinate ``x_0`` is the least significant bit. Truth
tables are indexed by that encoding and stored packed, eight inputs per byte,
least significant bit first.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, DimensionError, ParityError

DEFAULT_MAX_N = 28
MAX_N_ENV = "RSBENT_MAX_N"


def max_n() -> int:
    """Largest number of variables a truth table may have."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw, 0)
    except ValueError:
        raise CapacityError(f"{MAX_N_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise CapacityError(f"{MAX_N_ENV} must be positive, got {value}")
    return value


def check_capacity(n: int) -> None:
    if n < 1:
        raise DimensionError(f"number of variables must be positive, got {n}")
    limit = max_n()
    if n > limit:
        raise CapacityError(f"n={n} exceeds the configured capacity of {limit} variables")


def popcount(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values)


def parity(values: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(values) & 1).astype(np.uint8)


# --------------------------------------------------------------------------
# vectors


@dataclass(frozen=True, slots=True)
class BitVec:
    """A length-``n`` binary vector stored as its integer encoding."""

    n: int
    value: int

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"vector length must be positive, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise DimensionError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BitVec:
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise DimensionError(f"coordinate {i} is {b!r}, expected 0 or 1")
            value |= b << i
        return cls(len(bits), value)

    @classmethod
    def from_support(cls, n: int, indices: Iterable[int]) -> BitVec:
        value = 0
        for i in indices:
            if not 0 <= i < n:
                raise DimensionError(f"index {i} out of range for length {n}")
            value |= 1 << i
        return cls(n, value)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.n))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if (self.value >> i) & 1)

    def complement(self) -> BitVec:
        return BitVec(self.n, self.value ^ ((1 << self.n) - 1))

    def order_key(self) -> tuple[int, int]:
        """Sort key: Hamming weight first, then encoding."""
        return (self.weight, self.value)

    def _same_n(self, other: BitVec) -> None:
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")

    def __xor__(self, other: BitVec) -> BitVec:
        self._same_n(other)
        return BitVec(self.n, self.value ^ other.value)

    def __and__(self, other: BitVec) -> BitVec:
        self._same_n(other)
        return BitVec(self.n, self.value & other.value)

    def __or__(self, other: BitVec) -> BitVec:
        self._same_n(other)
        return BitVec(self.n, self.value | other.value)

    def dot(self, other: BitVec) -> int:
        self._same_n(other)
        return (self.value & other.value).bit_count() & 1

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


@dataclass(frozen=True, slots=True)
class HalfPair:
    """The two halves ``x' = (x_0..x_{m-1})`` and ``x'' = (x_m..x_{2m-1})``."""

    lo: BitVec
    hi: BitVec

    def __post_init__(self):
        if self.lo.n != self.hi.n:
            raise DimensionError(f"halves differ in length: {self.lo.n} vs {self.hi.n}")

    @property
    def m(self) -> int:
        return self.lo.n

    def join(self) -> BitVec:
        return BitVec(2 * self.m, self.lo.value | (self.hi.value << self.m))


def covers(y: BitVec, x: BitVec) -> bool:
    """True iff ``x_i <= y_i`` for every coordinate."""
    if y.n != x.n:
        raise DimensionError(f"length mismatch: {y.n} vs {x.n}")
    return x.value & ~y.value == 0


def split_halves(x: BitVec) -> HalfPair:
    if x.n % 2:
        raise ParityError(f"cannot split a vector of odd length {x.n}")
    m = x.n // 2
    mask = (1 << m) - 1
    return HalfPair(BitVec(m, x.value & mask), BitVec(m, x.value >> m))


def half_dot(p: HalfPair) -> int:
    """``x' . x''`` over F_2."""
    return p.lo.dot(p.hi)


def half_star_zero(p: HalfPair) -> bool:
    """True iff the halves have disjoint supports."""
    return p.lo.value & p.hi.value == 0


# --------------------------------------------------------------------------
# truth tables


def _pack(bits: np.ndarray) -> bytes:
    return np.packbits(bits.astype(np.uint8, copy=False), bitorder="little").tobytes()


@dataclass(frozen=True)
class BoolFn:
    """An ``n``-variable Boolean function as a packed truth table.

    Bit ``k`` of ``table`` (little-endian within and across bytes) is
    ``f(k)``. ``provenance`` records how a constructed function was made and
    does not take part in equality.
    """

    n: int
    table: bytes
    provenance: dict | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        check_capacity(self.n)
        size = 1 << self.n
        if len(self.table) != max(1, size // 8):
            raise DimensionError(
                f"table of {len(self.table)} bytes cannot hold 2^{self.n} bits")
        if size < 8 and self.table[0] >> size:
            raise DimensionError("truth table has bits set beyond 2^n")

    @classmethod
    def from_bits(cls, n: int, bits: np.ndarray | Sequence[int]) -> BoolFn:
        check_capacity(n)
        arr = np.asarray(bits)
        if arr.shape != (1 << n,):
            raise DimensionError(f"expected {1 << n} truth-table entries, got shape {arr.shape}")
        if arr.dtype != np.bool_ and np.any((arr != 0) & (arr != 1)):
            raise DimensionError("truth-table entries must be 0 or 1")
        return cls(n, _pack(arr))

    @classmethod
    def from_int(cls, n: int, value: int) -> BoolFn:
        check_capacity(n)
        size = 1 << n
        if not 0 <= value < (1 << size):
            raise DimensionError(f"integer does not fit a {size}-entry truth table")
        return cls(n, value.to_bytes(max(1, size // 8), "little"))

    @classmethod
    def zero(cls, n: int) -> BoolFn:
        check_capacity(n)
        return cls(n, bytes(max(1, (1 << n) // 8)))

    @classmethod
    def one(cls, n: int) -> BoolFn:
        return cls.from_int(n, (1 << (1 << n)) - 1)

    @functools.cached_property
    def bits(self) -> np.ndarray:
        """Read-only uint8 array of the ``2^n`` outputs."""
        arr = np.unpackbits(np.frombuffer(self.table, dtype=np.uint8),
                            count=1 << self.n, bitorder="little")
        arr.flags.writeable = False
        return arr

    def to_int(self) -> int:
        return int.from_bytes(self.table, "little")

    @property
    def weight(self) -> int:
        return self.to_int().bit_count()

    def support_indices(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def support(self) -> frozenset[BitVec]:
        return frozenset(BitVec(self.n, int(k)) for k in self.support_indices())

    def __call__(self, x: int | BitVec) -> int:
        if isinstance(x, BitVec):
            if x.n != self.n:
                raise DimensionError(f"input length {x.n} for a {self.n}-variable function")
            x = x.value
        return (self.table[x >> 3] >> (x & 7)) & 1

    def __xor__(self, other: BoolFn) -> BoolFn:
        return xor_fn(self, other)

    def with_provenance(self, **info) -> BoolFn:
        return replace(self, provenance=dict(info))


def fn_from_support(n: int, support: Iterable[BitVec | int]) -> BoolFn:
    """Characteristic function of a set of vectors."""
    check_capacity(n)
    bits = np.zeros(1 << n, dtype=np.uint8)
    for x in support:
        if isinstance(x, BitVec):
            if x.n != n:
                raise DimensionError(f"element of length {x.n} in a support of length {n}")
            x = x.value
        elif not 0 <= x < (1 << n):
            raise DimensionError(f"element {x} out of range for n={n}")
        bits[x] = 1
    return BoolFn.from_bits(n, bits)


def xor_fn(f: BoolFn, g: BoolFn) -> BoolFn:
    if f.n != g.n:
        raise DimensionError(f"cannot xor functions of {f.n} and {g.n} variables")
    a = np.frombuffer(f.table, dtype=np.uint8)
    b = np.frombuffer(g.table, dtype=np.uint8)
    return BoolFn(f.n, (a ^ b).tobytes())


# --------------------------------------------------------------------------
# algebraic normal form


class _ZeroDegree:
    """Degree of the zero polynomial; compares below every integer."""

    __slots__ = ()

    def __repr__(self):
        return "ZERO_DEGREE"

    def __str__(self):
        return "zero function"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("rsbent.zero-degree")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


ZERO_DEGREE = _ZeroDegree()


@dataclass(frozen=True)
class AnfPoly:
    """``XOR of x^alpha`` over the exponent masks in ``terms``.

    Masks are stored as integer encodings; mask 0 is the constant 1.
    """

    n: int
    terms: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"number of variables must be positive, got {self.n}")
        if not isinstance(self.terms, frozenset):
            object.__setattr__(self, "terms", frozenset(self.terms))
        bound = 1 << self.n
        for t in self.terms:
            if not 0 <= t < bound:
                raise DimensionError(f"mask {t} out of range for n={self.n}")

    @classmethod
    def from_index_sets(cls, n: int, monomials: Iterable[Iterable[int]]) -> AnfPoly:
        """Build from variable-index tuples, XOR-ing repeated monomials away."""
        terms: set[int] = set()
        for mono in monomials:
            mask = 0
            for i in mono:
                mask |= 1 << (i % n)
            terms ^= {mask}
        return cls(n, frozenset(terms))

    def monomials(self) -> list[BitVec]:
        return [BitVec(self.n, t) for t in sorted(self.terms, key=_term_key)]

    def is_zero(self) -> bool:
        return not self.terms

    def __xor__(self, other: AnfPoly) -> AnfPoly:
        if self.n != other.n:
            raise DimensionError(f"cannot add polynomials in {self.n} and {other.n} variables")
        return AnfPoly(self.n, self.terms ^ other.terms)

    def __len__(self) -> int:
        return len(self.terms)


def _term_key(mask: int) -> tuple[int, tuple[int, ...]]:
    # weight first, then the ascending index tuple: x0*x1 < x0*x3 < x1*x2
    return (mask.bit_count(), tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1))


def moebius(bits: np.ndarray, n: int) -> np.ndarray:
    """Binary Moebius transform; it is its own inverse."""
    a = np.array(bits, dtype=np.uint8, copy=True)
    for i in range(n):
        v = a.reshape(-1, 2, 1 << i)
        v[:, 1, :] ^= v[:, 0, :]
    return a


def anf_of(f: BoolFn) -> AnfPoly:
    coeffs = moebius(f.bits, f.n)
    return AnfPoly(f.n, frozenset(np.flatnonzero(coeffs).tolist()))


def fn_of_anf(p: AnfPoly) -> BoolFn:
    check_capacity(p.n)
    coeffs = np.zeros(1 << p.n, dtype=np.uint8)
    if p.terms:
        coeffs[np.fromiter(p.terms, dtype=np.int64, count=len(p.terms))] = 1
    return BoolFn.from_bits(p.n, moebius(coeffs, p.n))


def degree(p: AnfPoly) -> int | _ZeroDegree:
    if not p.terms:
        return ZERO_DEGREE
    return max(t.bit_count() for t in p.terms)


def algebraic_degree(f: BoolFn) -> int | _ZeroDegree:
    coeffs = moebius(f.bits, f.n)
    nz = np.flatnonzero(coeffs)
    if nz.size == 0:
        return ZERO_DEGREE
    return int(popcount(nz).max())


# --------------------------------------------------------------------------
# text formats


def tt_to_hex(f: BoolFn) -> str:
    digits = max(1, (1 << f.n) // 4)
    return format(f.to_int(), f"0{digits}x")


def tt_from_hex(text: str, n: int | None = None) -> BoolFn:
    """Parse the hex truth-table format.

    Without ``n`` the variable count is inferred from the digit count; a
    single digit is read as ``n = 2``.
    """
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s or any(c not in "0123456789abcdef" for c in s):
        raise DimensionError(f"not a hexadecimal truth table: {text!r}")
    if n is None:
        bits = 4 * len(s)
        if bits & (bits - 1):
            raise DimensionError(f"{len(s)} hex digits is not a power-of-two table length")
        n = bits.bit_length() - 1
    elif len(s) != max(1, (1 << n) // 4):
        raise DimensionError(f"expected {max(1, (1 << n) // 4)} hex digits for n={n}, got {len(s)}")
    return BoolFn.from_int(n, int(s, 16))


def _term_text(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{i}" for i in range(mask.bit_length()) if (mask >> i) & 1)


def anf_to_text(p: AnfPoly) -> str:
    if not p.terms:
        return "0"
    return " + ".join(_term_text(t) for t in sorted(p.terms, key=_term_key))


def anf_from_text(text: str, n: int) -> AnfPoly:
    s = text.strip()
    if s == "0":
        return AnfPoly(n, frozenset())
    terms: set[int] = set()
    for raw in s.split("+"):
        tok = raw.strip()
        if tok == "1":
            mask = 0
        else:
            mask = 0
            for var in tok.split("*"):
                var = var.strip()
                if not (var.startswith("x") and var[1:].isdigit()):
                    raise DimensionError(f"bad ANF term {tok!r}")
                i = int(var[1:])
                if i >= n:
                    raise DimensionError(f"variable x{i} out of range for n={n}")
                mask |= 1 << i
        terms ^= {mask}
    return AnfPoly(n, frozenset(terms))
