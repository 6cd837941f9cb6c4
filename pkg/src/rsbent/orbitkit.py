"""Cyclic rotation of coordinates: orbits, representatives and their listing.

The representative of an orbit is its member with the smallest integer
encoding. ``enumerate_reps`` lists representatives by Hamming weight, then by
encoding, which is also an order in which no earlier vector covers a later
one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DimensionError
from .f2core import BitVec, BoolFn, check_capacity

SCAN_LIMIT = 24


def _rotate_int(v, l: int, n: int):
    # works on python ints and numpy integer arrays alike
    l %= n
    if l == 0:
        return v
    mask = (1 << n) - 1
    return ((v >> l) | (v << (n - l))) & mask


def rotate(x: BitVec, l: int) -> BitVec:
    """Left cyclic shift: coordinate ``i`` of the result is ``x_{(i+l) mod n}``."""
    if l < 0:
        raise DimensionError(f"shift must be non-negative, got {l}")
    return BitVec(x.n, _rotate_int(x.value, l, x.n))


def rep_value(value: int, n: int) -> int:
    return min(_rotate_int(value, l, n) for l in range(n))


def orbit_values(value: int, n: int) -> frozenset[int]:
    return frozenset(_rotate_int(value, l, n) for l in range(n))


@dataclass(frozen=True)
class Orbit:
    n: int
    members: frozenset[BitVec]
    rep: BitVec

    def __len__(self) -> int:
        return len(self.members)

    def values(self) -> frozenset[int]:
        return frozenset(x.value for x in self.members)


def orbit(x: BitVec) -> Orbit:
    vals = orbit_values(x.value, x.n)
    return Orbit(x.n, frozenset(BitVec(x.n, v) for v in vals), BitVec(x.n, min(vals)))


def representative(x: BitVec) -> BitVec:
    return BitVec(x.n, rep_value(x.value, x.n))


def is_representative(x: BitVec) -> bool:
    return rep_value(x.value, x.n) == x.value


@dataclass(frozen=True)
class RepList:
    """One representative per orbit of F_2^n, in (weight, value) order."""

    n: int
    reps: tuple[BitVec, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __getitem__(self, i):
        return self.reps[i]

    def values(self) -> list[int]:
        return [r.value for r in self.reps]

    def index(self) -> dict[int, int]:
        """Map representative encoding to its position in the list."""
        return {r.value: i for i, r in enumerate(self.reps)}

    def export(self) -> str:
        """One lowercase hex encoding per line, zero-padded to ceil(n/4) digits."""
        digits = max(1, -(-self.n // 4))
        return "".join(format(r.value, f"0{digits}x") + "\n" for r in self.reps)


def _index_dtype(n: int):
    return np.uint32 if n <= 32 else np.uint64


def _scan_reps(n: int) -> np.ndarray:
    vals = np.arange(1 << n, dtype=_index_dtype(n))
    best = vals.copy()
    for l in range(1, n):
        np.minimum(best, _rotate_int(vals, l, n), out=best)
    return vals[best == vals]


def _necklaces(n: int) -> list[int]:
    # FKM generation of binary necklaces, read most significant bit first
    out = []
    a = [0] * (n + 1)

    def gen(t: int, p: int):
        if t > n:
            if n % p == 0:
                v = 0
                for bit in a[1:]:
                    v = (v << 1) | bit
                out.append(v)
            return
        a[t] = a[t - p]
        gen(t + 1, p)
        if a[t - p] == 0:
            a[t] = 1
            gen(t + 1, t)

    gen(1, 1)
    return out


def enumerate_reps(n: int, method: str = "auto") -> RepList:
    """List R_n.

    ``method`` is ``"scan"`` (filter every vector), ``"necklace"`` (FKM
    generation) or ``"auto"``, which scans up to ``SCAN_LIMIT`` variables.
    """
    check_capacity(n)
    if method == "auto":
        method = "scan" if n <= SCAN_LIMIT else "necklace"
    if method == "scan":
        values = [int(v) for v in _scan_reps(n)]
    elif method == "necklace":
        values = _necklaces(n)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    values.sort(key=lambda v: (v.bit_count(), v))
    return RepList(n, tuple(BitVec(n, v) for v in values))


def is_rotation_symmetric(f: BoolFn) -> bool:
    n = f.n
    if n == 1:
        return True
    idx = np.arange(1 << n, dtype=_index_dtype(n))
    bits = f.bits
    for l in range(1, n):
        if not np.array_equal(bits[_rotate_int(idx, l, n)], bits):
            return False
    return True


@dataclass(frozen=True)
class OrbitSet:
    """A rotation-closed subset of F_2^n held as its orbit representatives."""

    n: int
    reps: tuple[BitVec, ...]

    def members(self) -> frozenset[BitVec]:
        return frozenset(BitVec(self.n, v) for r in self.reps for v in orbit_values(r.value, self.n))

    def member_values(self) -> frozenset[int]:
        return frozenset(v for r in self.reps for v in orbit_values(r.value, self.n))

    def __len__(self) -> int:
        return sum(len(orbit_values(r.value, self.n)) for r in self.reps)


def close_under_rotation(vectors: Iterable[BitVec], m: int) -> tuple[OrbitSet, bool]:
    """Smallest rotation-closed superset, plus whether the input was already closed."""
    given: set[int] = set()
    for x in vectors:
        if x.n != m:
            raise DimensionError(f"element of length {x.n} in a subset of F_2^{m}")
        given.add(x.value)
    reps = {rep_value(v, m) for v in given}
    closure = {v for r in reps for v in orbit_values(r, m)}
    ordered = sorted(reps, key=lambda v: (v.bit_count(), v))
    return OrbitSet(m, tuple(BitVec(m, v) for v in ordered)), closure == given
