"""Rotation symmetric bent functions built by modifying ``x' . x''``.

Every construction starts from the quadratic bent function
``f(x) = x_0 x_m + ... + x_{m-1} x_{2m-1}`` on ``n = 2m`` variables and XORs
onto it the characteristic function of a rotation-closed set, or an
equivalent sum of monomials. The reference builders for the cubic families
of Gao et al. and Carlet et al. are included as cross-checks.

Terminology used below:

* modification set of ``gamma``: ``{x : x'' = x' xor d, d in O_m(gamma)}``.
* star-disjoint mask: a mask ``beta`` whose halves have disjoint supports;
  ``beta' | beta''`` is then its *union* in F_2^m.
* orbit monomial sum of ``delta``: XOR of ``x^beta`` over star-disjoint
  masks whose union lies in ``O_m(delta)``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConstraintError, DimensionError, InvariantViolation, NormalizationError, ParityError
from .f2core import AnfPoly, BitVec, BoolFn, algebraic_degree, check_capacity, fn_of_anf, parity
from .orbitkit import RepList, enumerate_reps, orbit_values, rep_value


def _check_m(m: int) -> None:
    if m < 1:
        raise DimensionError(f"half-dimension must be positive, got {m}")
    check_capacity(2 * m)


def _check_rep(v: BitVec, m: int) -> None:
    if v.n != m:
        raise DimensionError(f"expected a vector of length {m}, got length {v.n}")
    if rep_value(v.value, m) != v.value:
        raise NormalizationError(
            f"{v} is not an orbit representative; use {BitVec(m, rep_value(v.value, m))}")


def _hex(v: BitVec) -> str:
    return hex(v.value)


def half_dot_function(n: int) -> BoolFn:
    """``x' . x''``, the quadratic rotation symmetric bent seed."""
    if n % 2:
        raise ParityError(f"n must be even, got {n}")
    check_capacity(n)
    m = n // 2
    idx = np.arange(1 << n, dtype=np.int64)
    bits = parity((idx & ((1 << m) - 1)) & (idx >> m))
    return BoolFn.from_bits(n, bits).with_provenance(kind="seed", n=n)


# --------------------------------------------------------------------------
# modification sets


def _modification_indices(deltas: Iterable[int], m: int) -> np.ndarray:
    lo = np.arange(1 << m, dtype=np.int64)
    parts = [lo | ((lo ^ d) << m) for d in deltas]
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def modification_set(gamma: BitVec, m: int) -> frozenset[BitVec]:
    """All ``x`` in F_2^(2m) with ``x'' = x' xor d`` for some rotation ``d`` of ``gamma``."""
    _check_m(m)
    _check_rep(gamma, m)
    idx = _modification_indices(orbit_values(gamma.value, m), m)
    return frozenset(BitVec(2 * m, int(k)) for k in idx)


def modification_set_fn(gamma: BitVec, m: int) -> BoolFn:
    _check_m(m)
    _check_rep(gamma, m)
    bits = np.zeros(1 << (2 * m), dtype=np.uint8)
    bits[_modification_indices(orbit_values(gamma.value, m), m)] = 1
    return BoolFn.from_bits(2 * m, bits)


@functools.lru_cache(maxsize=None)
def _star_disjoint(m: int) -> tuple[tuple[int, int], ...]:
    """Every (union, mask) pair for star-disjoint masks of length 2m; 3^m entries."""
    out = []
    for s in range(1 << m):
        sub = s
        while True:
            out.append((s, sub | ((s ^ sub) << m)))
            if sub == 0:
                break
            sub = (sub - 1) & s
    return tuple(out)


def _masks_with_union(s: int, m: int) -> list[int]:
    out = []
    sub = s
    while True:
        out.append(sub | ((s ^ sub) << m))
        if sub == 0:
            break
        sub = (sub - 1) & s
    return out


def covering_sum_anf(delta: BitVec, m: int) -> AnfPoly:
    """XOR of ``x^beta`` over star-disjoint ``beta`` whose union covers ``delta``.

    ``delta`` need not be a representative.
    """
    _check_m(m)
    if delta.n != m:
        raise DimensionError(f"expected a vector of length {m}, got length {delta.n}")
    d = delta.value
    return AnfPoly(2 * m, frozenset(mask for s, mask in _star_disjoint(m) if d & ~s == 0))


def modification_set_anf(gamma: BitVec, m: int) -> AnfPoly:
    """Closed-form ANF of the modification set's characteristic function.

    A star-disjoint mask appears when its union covers an odd number of the
    rotations of ``gamma``.
    """
    _check_m(m)
    _check_rep(gamma, m)
    rots = orbit_values(gamma.value, m)
    terms = frozenset(mask for s, mask in _star_disjoint(m)
                      if sum(1 for r in rots if r & ~s == 0) & 1)
    return AnfPoly(2 * m, terms)


def orbit_monomial_sum(delta: BitVec, m: int) -> AnfPoly:
    """XOR of ``x^beta`` over star-disjoint ``beta`` with union in ``O_m(delta)``.

    Every term has degree ``wt(delta)``.
    """
    _check_m(m)
    _check_rep(delta, m)
    terms = [mask for s in orbit_values(delta.value, m) for mask in _masks_with_union(s, m)]
    return AnfPoly(2 * m, frozenset(terms))


# --------------------------------------------------------------------------
# builders


@dataclass(frozen=True)
class ModificationSpec:
    """A rotation-closed subset of F_2^m given by its orbit representatives."""

    m: int
    reps: tuple[BitVec, ...]

    def __post_init__(self):
        _check_m(self.m)
        reps = tuple(self.reps)
        object.__setattr__(self, "reps", reps)
        seen = set()
        for r in reps:
            _check_rep(r, self.m)
            if r.value in seen:
                raise ConstraintError(f"duplicate representative {r}")
            seen.add(r.value)

    @classmethod
    def from_values(cls, m: int, values: Iterable[int]) -> ModificationSpec:
        return cls(m, tuple(BitVec(m, v) for v in values))

    def member_values(self) -> frozenset[int]:
        return frozenset(v for r in self.reps for v in orbit_values(r.value, self.m))

    @property
    def size(self) -> int:
        return sum(len(orbit_values(r.value, self.m)) for r in self.reps)

    @property
    def odd(self) -> bool:
        return self.size % 2 == 1


def build_from_gamma(spec: ModificationSpec) -> BoolFn:
    """Flip ``x' . x''`` on the union of the modification sets of ``spec.reps``."""
    m = spec.m
    n = 2 * m
    bits = half_dot_function(n).bits.copy()
    deltas = [v for r in spec.reps for v in orbit_values(r.value, m)]
    bits[_modification_indices(deltas, m)] ^= 1
    return BoolFn.from_bits(n, bits).with_provenance(
        kind="theorem1", m=m, gamma=[_hex(r) for r in spec.reps])


def _seed_plus(anf: AnfPoly, m: int) -> np.ndarray:
    return half_dot_function(2 * m).bits ^ fn_of_anf(anf).bits


def build_from_orbit_sum(delta: BitVec, m: int) -> BoolFn:
    """Seed XOR the orbit monomial sum of ``delta``; degree ``wt(delta)``."""
    _check_m(m)
    _check_rep(delta, m)
    if delta.weight < 2:
        raise ConstraintError(f"delta must have weight at least 2, got weight {delta.weight}")
    bits = _seed_plus(orbit_monomial_sum(delta, m), m)
    return BoolFn.from_bits(2 * m, bits).with_provenance(
        kind="theorem3", m=m, delta=_hex(delta))


def build_from_orbit_sums(deltas: Sequence[BitVec], m: int) -> BoolFn:
    """Seed XOR the orbit monomial sums of every representative in ``deltas``."""
    _check_m(m)
    if not deltas:
        raise ConstraintError("the set of representatives must be non-empty")
    seen = set()
    total: set[int] = set()
    for d in deltas:
        _check_rep(d, m)
        if d.value in seen:
            raise ConstraintError(f"duplicate representative {d}")
        seen.add(d.value)
        total ^= orbit_monomial_sum(d, m).terms
    bits = _seed_plus(AnfPoly(2 * m, frozenset(total)), m)
    return BoolFn.from_bits(2 * m, bits).with_provenance(
        kind="theorem4", m=m, a=[_hex(d) for d in deltas])


def _check_weight_index(i: int, m: int) -> None:
    _check_m(m)
    if not 0 <= i <= m:
        raise ConstraintError(f"weight index must satisfy 0 <= i <= {m}, got {i}")


def weight_class_set(i: int, m: int) -> frozenset[BitVec]:
    """Union of the modification sets of all weight-``i`` representatives."""
    _check_weight_index(i, m)
    deltas = [v for v in range(1 << m) if v.bit_count() == i]
    return frozenset(BitVec(2 * m, int(k)) for k in _modification_indices(deltas, m))


def weight_class_anf(i: int, m: int) -> AnfPoly:
    """Star-disjoint masks of every weight ``j`` in ``[i, m]`` whose binary digits cover ``i``."""
    _check_weight_index(i, m)
    weights = {j for j in range(i, m + 1) if i & ~j == 0}
    return AnfPoly(2 * m, frozenset(mask for s, mask in _star_disjoint(m)
                                    if s.bit_count() in weights))


def build_from_weight_class(i: int, m: int) -> BoolFn:
    """Seed XOR the weight-class characteristic function.

    Always bent and rotation symmetric. The provenance carries the measured
    degree, which equals ``m`` exactly when ``C(m, i)`` is odd (for m >= 3).
    """
    _check_weight_index(i, m)
    bits = _seed_plus(weight_class_anf(i, m), m)
    f = BoolFn.from_bits(2 * m, bits)
    return f.with_provenance(kind="theorem5", m=m, i=i,
                             degree=algebraic_degree(f),
                             binomial_odd=math.comb(m, i) % 2 == 1)


# --------------------------------------------------------------------------
# expressing orbit monomial sums through modification sets


def substitution_matrix(m: int) -> tuple[RepList, np.ndarray]:
    """Coefficients of orbit monomial sums inside each modification set's ANF.

    Row ``g``, column ``d`` is the parity of the number of rotations of
    ``reps[g]`` covered by ``reps[d]``. In (weight, value) order the matrix
    is upper unitriangular.
    """
    _check_m(m)
    reps = enumerate_reps(m)
    vals = reps.values()
    c = np.zeros((len(vals), len(vals)), dtype=np.uint8)
    for g, gv in enumerate(vals):
        rots = orbit_values(gv, m)
        for d, dv in enumerate(vals):
            c[g, d] = sum(1 for r in rots if r & ~dv == 0) & 1
    return reps, c


@dataclass(frozen=True)
class OrbitSumDecomposition:
    """Representatives whose modification sets XOR to ``delta``'s orbit monomial sum."""

    delta: BitVec
    a_set: frozenset[BitVec]

    def sorted_reps(self) -> list[BitVec]:
        return sorted(self.a_set, key=BitVec.order_key)


def solve_orbit_sum(delta: BitVec, m: int) -> OrbitSumDecomposition:
    """Forward substitution over the representative order, then verified on truth tables."""
    _check_m(m)
    _check_rep(delta, m)
    reps, c = substitution_matrix(m)
    size = len(reps)
    if not np.all(np.diag(c) == 1) or np.any(np.tril(c, -1)):
        raise InvariantViolation(f"substitution matrix for m={m} is not unitriangular")
    target = reps.index()[delta.value]
    a = np.zeros(size, dtype=np.uint8)
    for k in range(size):
        acc = 1 if k == target else 0
        acc ^= int(np.bitwise_xor.reduce(a[:k] & c[:k, k])) if k else 0
        a[k] = acc
    chosen = [reps[k] for k in np.flatnonzero(a)]
    if not chosen:
        raise InvariantViolation(f"empty decomposition for {delta}")

    n = 2 * m
    lhs = np.zeros(1 << n, dtype=np.uint8)
    for g in chosen:
        lhs[_modification_indices(orbit_values(g.value, m), m)] ^= 1
    rhs = fn_of_anf(orbit_monomial_sum(delta, m)).bits
    if not np.array_equal(lhs, rhs):
        raise InvariantViolation(f"decomposition of {delta} failed truth-table verification")
    return OrbitSumDecomposition(delta, frozenset(chosen))


def reaches_max_degree(spec: ModificationSpec) -> bool:
    """Parity test for degree ``m``; meaningful for ``m >= 3``."""
    return spec.odd


# --------------------------------------------------------------------------
# earlier cubic constructions


def _seed_terms(m: int) -> list[tuple[int, ...]]:
    return [(i, m + i) for i in range(m)]


def gao_cubic(n: int, t: int) -> BoolFn:
    """Gao et al.: seed + sum_i (x_i x_{i+t} x_{i+m} + x_i x_{i+t}), indices mod n.

    Bent exactly when ``m / gcd(m, t)`` is odd.
    """
    if n % 2:
        raise ParityError(f"n must be even, got {n}")
    check_capacity(n)
    m = n // 2
    if not 1 <= t <= m - 1:
        raise ConstraintError(f"t must satisfy 1 <= t <= {m - 1}, got {t}")
    monos = _seed_terms(m)
    for i in range(n):
        monos.append((i, t + i, m + i))
        monos.append((i, t + i))
    f = fn_of_anf(AnfPoly.from_index_sets(n, monos))
    return f.with_provenance(kind="gao", n=n, t=t)


def carlet_cubic(r: int) -> BoolFn:
    """Carlet et al., ``n = 6r``: seed + sum_{i<n} x_i x_{i+r} x_{i+2r} + sum_{i<2r} x_i x_{i+2r} x_{i+4r}."""
    if r < 1:
        raise ConstraintError(f"r must be positive, got {r}")
    n = 6 * r
    check_capacity(n)
    monos = _seed_terms(3 * r)
    monos += [(i, r + i, 2 * r + i) for i in range(n)]
    monos += [(i, 2 * r + i, 4 * r + i) for i in range(2 * r)]
    f = fn_of_anf(AnfPoly.from_index_sets(n, monos))
    return f.with_provenance(kind="carlet", r=r, n=n)


def delta_with_support(m: int, indices: Iterable[int]) -> BitVec:
    return BitVec.from_support(m, indices)
