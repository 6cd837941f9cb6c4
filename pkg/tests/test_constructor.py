import math

import numpy as np
import pytest

from rsbent.constructor import (ModificationSpec, build_from_gamma, build_from_orbit_sum,
                                build_from_orbit_sums, build_from_weight_class, carlet_cubic,
                                covering_sum_anf, delta_with_support, gao_cubic, half_dot_function,
                                modification_set, modification_set_anf, modification_set_fn,
                                orbit_monomial_sum, reaches_max_degree, solve_orbit_sum,
                                substitution_matrix, weight_class_anf, weight_class_set)
from rsbent.errors import ConstraintError, DimensionError, NormalizationError, ParityError
from rsbent.f2core import (AnfPoly, BitVec, BoolFn, algebraic_degree, anf_from_text, anf_of,
                           fn_from_support, fn_of_anf)
from rsbent.orbitkit import enumerate_reps, is_rotation_symmetric, orbit
from rsbent.spectral import is_bent

from . import oracles


def bv(*bits):
    return BitVec.from_bits(bits)


def orbits4(*vectors):
    out = set()
    for v in vectors:
        out |= orbit(BitVec.from_bits(v)).values()
    return out


def vals(vectors):
    return {x.value for x in vectors}


CYCLIC_QUADRATICS = anf_from_text("x0*x1 + x1*x2 + x2*x3 + x0*x3", 4)


# --- seed --------------------------------------------------------------------


def test_seed_examples():
    f = half_dot_function(4)
    assert set(f.support_indices().tolist()) == orbits4((1, 0, 1, 0), (1, 1, 1, 0))
    assert f.weight == 6
    assert set(half_dot_function(2).support_indices().tolist()) == {3}
    with pytest.raises(ParityError):
        half_dot_function(5)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_seed_matches_oracle(n):
    f = half_dot_function(n)
    assert f.bits.tolist() == oracles.seed_bits(n)
    assert is_bent(f) and is_rotation_symmetric(f)


# --- modification sets -----------------------------------------------------------


def test_modification_set_table_rows():
    assert vals(modification_set(bv(1, 1), 2)) == orbits4((1, 1, 0, 0))
    assert vals(modification_set(bv(1, 0), 2)) == orbits4((1, 0, 0, 0), (1, 1, 1, 0))
    assert vals(modification_set(bv(0, 0), 2)) == orbits4((0, 0, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1))


@pytest.mark.parametrize("m", range(1, 6))
def test_modification_set_matches_scan(m):
    for g in enumerate_reps(m):
        got = vals(modification_set(g, m))
        assert got == oracles.modification_set_by_scan(g.value, m)
        assert len(got) == len(orbit(g)) << m


def test_modification_set_requires_representative():
    with pytest.raises(NormalizationError):
        modification_set(bv(0, 1), 2)
    with pytest.raises(DimensionError):
        modification_set(bv(0, 1, 0), 2)


@pytest.mark.parametrize("m", range(1, 9))
def test_modification_sets_partition(m):
    seen = np.zeros(1 << (2 * m), dtype=np.int64)
    for g in enumerate_reps(m):
        seen += modification_set_fn(g, m).bits
    assert np.all(seen == 1)


# --- closed-form ANFs --------------------------------------------------------------


def test_covering_sum_examples():
    assert covering_sum_anf(bv(1, 1), 2) == CYCLIC_QUADRATICS
    expected = anf_from_text("1 + x0 + x1 + x2 + x3", 4) ^ CYCLIC_QUADRATICS
    assert covering_sum_anf(bv(0, 0), 2) == expected


def test_modification_set_anf_two_orbit_example():
    assert modification_set_anf(bv(1, 0), 2) == anf_from_text("x0 + x1 + x2 + x3", 4)
    rows = covering_sum_anf(bv(1, 0), 2) ^ covering_sum_anf(bv(0, 1), 2)
    assert rows == modification_set_anf(bv(1, 0), 2)


@pytest.mark.parametrize("m", range(1, 5))
def test_modification_set_anf_matches_moebius(m):
    for g in enumerate_reps(m):
        support = oracles.modification_set_by_scan(g.value, m)
        bits = fn_from_support(2 * m, support).bits.tolist()
        assert modification_set_anf(g, m).terms == oracles.naive_anf(bits, 2 * m)


def test_orbit_monomial_sum_examples():
    assert orbit_monomial_sum(bv(1, 1), 2) == CYCLIC_QUADRATICS
    assert orbit_monomial_sum(bv(1, 0), 2) == anf_from_text("x0 + x1 + x2 + x3", 4)
    assert orbit_monomial_sum(bv(0, 0), 2) == AnfPoly(4, frozenset({0}))
    with pytest.raises(NormalizationError):
        orbit_monomial_sum(bv(0, 1), 2)


@pytest.mark.parametrize("m", range(1, 7))
def test_orbit_monomial_sum_shape(m):
    for d in enumerate_reps(m):
        p = orbit_monomial_sum(d, m)
        assert len(p) == len(orbit(d)) << d.weight
        assert all(t.bit_count() == d.weight for t in p.terms)
        if m <= 4:
            rots = oracles.orbit_of(d.value, m)
            brute = {b for b in range(1 << (2 * m)) if oracles.star_disjoint(b, m)
                     and ((b & ((1 << m) - 1)) | (b >> m)) in rots}
            assert p.terms == brute


# --- builders --------------------------------------------------------------------


def test_build_from_gamma_examples():
    f = build_from_gamma(ModificationSpec.from_values(2, [0b11]))
    expected = set(half_dot_function(4).support_indices().tolist()) ^ orbits4((1, 1, 0, 0))
    assert set(f.support_indices().tolist()) == expected
    assert f.weight == 10
    assert is_bent(f)
    assert build_from_gamma(ModificationSpec(2, ())) == half_dot_function(4)
    everything = ModificationSpec.from_values(2, enumerate_reps(2).values())
    assert build_from_gamma(everything) == half_dot_function(4) ^ BoolFn.one(4)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_build_from_gamma_exhaustive(m):
    reps = enumerate_reps(m).values()
    for subset in oracles.all_subsets(reps):
        spec = ModificationSpec.from_values(m, subset)
        f = build_from_gamma(spec)
        assert is_bent(f) and is_rotation_symmetric(f)
        support = set()
        for g in subset:
            support |= oracles.modification_set_by_scan(g, m)
        seed = oracles.seed_bits(2 * m)
        assert f.bits.tolist() == [b ^ (x in support) for x, b in enumerate(seed)]


def test_modification_spec_validation():
    with pytest.raises(NormalizationError):
        ModificationSpec.from_values(3, [0b010])
    with pytest.raises(ConstraintError):
        ModificationSpec.from_values(3, [1, 1])
    spec = ModificationSpec.from_values(3, [0b001, 0b111])
    assert spec.size == 4 and not spec.odd


def test_build_from_orbit_sum_examples():
    f = build_from_orbit_sum(bv(1, 1), 2)
    assert f == half_dot_function(4) ^ fn_of_anf(CYCLIC_QUADRATICS)
    assert is_bent(f) and algebraic_degree(f) == 2

    d = delta_with_support(5, [0, 1, 2])
    f = build_from_orbit_sum(d, 5)
    assert is_bent(f) and is_rotation_symmetric(f) and algebraic_degree(f) == 3

    f = build_from_orbit_sum(bv(1, 1, 0), 3)
    assert algebraic_degree(f) == 2


@pytest.mark.parametrize("m", range(2, 8))
def test_build_from_orbit_sum_all_ones(m):
    f = build_from_orbit_sum(BitVec(m, (1 << m) - 1), m)
    assert is_bent(f) and is_rotation_symmetric(f) and algebraic_degree(f) == m


def test_build_from_orbit_sum_rejects_low_weight():
    for d in (bv(0, 0, 0), bv(1, 0, 0)):
        with pytest.raises(ConstraintError):
            build_from_orbit_sum(d, 3)
    with pytest.raises(NormalizationError):
        build_from_orbit_sum(bv(0, 1, 1), 3)


def test_build_from_orbit_sum_matches_mask_oracle():
    m = 3
    for d in enumerate_reps(m):
        if d.weight < 2:
            continue
        rots = oracles.orbit_of(d.value, m)
        terms = {b for b in range(1 << (2 * m)) if oracles.star_disjoint(b, m)
                 and ((b & 7) | (b >> 3)) in rots}
        extra = oracles.eval_anf(terms, 2 * m)
        expected = [a ^ b for a, b in zip(oracles.seed_bits(2 * m), extra)]
        assert build_from_orbit_sum(d, m).bits.tolist() == expected


def test_build_from_orbit_sums_examples():
    d = bv(1, 1, 0)
    assert build_from_orbit_sums([d], 3) == build_from_orbit_sum(d, 3)
    assert build_from_orbit_sums([bv(0, 0)], 2) == half_dot_function(4) ^ BoolFn.one(4)
    f = build_from_orbit_sums([bv(1, 0), bv(1, 1)], 2)
    assert is_bent(f) and is_rotation_symmetric(f)


def test_build_from_orbit_sums_errors():
    with pytest.raises(ConstraintError):
        build_from_orbit_sums([], 3)
    with pytest.raises(ConstraintError):
        build_from_orbit_sums([bv(1, 0, 0), bv(1, 0, 0)], 3)
    with pytest.raises(NormalizationError):
        build_from_orbit_sums([bv(0, 1, 0)], 3)


@pytest.mark.parametrize("m", range(2, 6))
def test_build_from_orbit_sums_random(m):
    rng = np.random.default_rng(7 * m)
    reps = enumerate_reps(m).reps
    for _ in range(30):
        picked = [r for r in reps if rng.random() < 0.5] or [reps[0]]
        f = build_from_orbit_sums(picked, m)
        assert is_bent(f) and is_rotation_symmetric(f)


# --- weight classes ------------------------------------------------------------------


def test_weight_class_set_examples():
    assert vals(weight_class_set(1, 2)) == orbits4((1, 0, 0, 0), (1, 1, 1, 0))
    for m in (2, 3, 4):
        full = BitVec(m, (1 << m) - 1)
        assert weight_class_set(m, m) == modification_set(full, m)
    row = weight_class_set(0, 2)
    assert vals(row) == orbits4((0, 0, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1))
    assert len(row) == math.comb(2, 0) << 2 == 4


@pytest.mark.parametrize("m", range(1, 6))
def test_weight_class_set_size(m):
    for i in range(m + 1):
        assert len(weight_class_set(i, m)) == math.comb(m, i) << m


def test_weight_class_range():
    for i in (-1, 4):
        with pytest.raises(ConstraintError):
            weight_class_set(i, 3)
        with pytest.raises(ConstraintError):
            weight_class_anf(i, 3)
        with pytest.raises(ConstraintError):
            build_from_weight_class(i, 3)


def test_weight_class_anf_examples():
    assert weight_class_anf(1, 2) == anf_from_text("x0 + x1 + x2 + x3", 4)
    assert weight_class_anf(2, 2) == CYCLIC_QUADRATICS
    expected = anf_from_text("1 + x0 + x1 + x2 + x3", 4) ^ CYCLIC_QUADRATICS
    assert weight_class_anf(0, 2) == expected


@pytest.mark.parametrize("m", range(1, 5))
def test_weight_class_anf_matches_moebius(m):
    for i in range(m + 1):
        bits = fn_from_support(2 * m, weight_class_set(i, m)).bits.tolist()
        assert weight_class_anf(i, m).terms == oracles.naive_anf(bits, 2 * m)


def test_build_from_weight_class_examples():
    f = build_from_weight_class(2, 2)
    assert f == half_dot_function(4) ^ fn_of_anf(CYCLIC_QUADRATICS)
    assert is_bent(f) and algebraic_degree(f) == 2
    f = build_from_weight_class(1, 2)
    assert f == half_dot_function(4) ^ fn_of_anf(anf_from_text("x0 + x1 + x2 + x3", 4))
    assert is_bent(f) and algebraic_degree(f) == 2


def test_weight_class_degree_drops_for_even_binomial():
    f = build_from_weight_class(1, 4)
    assert is_bent(f) and is_rotation_symmetric(f)
    assert algebraic_degree(f) == 3
    assert f.provenance["degree"] == 3 and f.provenance["binomial_odd"] is False


# --- orbit-sum decomposition -------------------------------------------------------------


def test_solve_orbit_sum_examples():
    assert solve_orbit_sum(bv(1, 1), 2).a_set == {bv(1, 1)}
    assert solve_orbit_sum(bv(1, 0), 2).a_set == {bv(1, 0)}
    assert solve_orbit_sum(bv(0, 0), 2).a_set == set(enumerate_reps(2).reps)


@pytest.mark.parametrize("m", range(1, 5))
def test_solve_orbit_sum_reproduces(m):
    for d in enumerate_reps(m):
        sol = solve_orbit_sum(d, m)
        assert sol.a_set
        acc = BoolFn.zero(2 * m)
        for g in sol.a_set:
            acc = acc ^ fn_from_support(2 * m, oracles.modification_set_by_scan(g.value, m))
        assert acc == fn_of_anf(orbit_monomial_sum(d, m))
        assert d in sol.a_set


@pytest.mark.parametrize("m", range(1, 7))
def test_substitution_matrix_unitriangular(m):
    reps, c = substitution_matrix(m)
    assert np.all(np.diag(c) == 1)
    assert not np.tril(c, -1).any()
    # row g is the ANF of the modification set of reps[g], grouped by orbit sum
    if m <= 4:
        for g, gamma in enumerate(reps):
            combined = set()
            for d, delta in enumerate(reps):
                if c[g, d]:
                    combined ^= orbit_monomial_sum(delta, m).terms
            assert combined == modification_set_anf(gamma, m).terms


def test_solve_orbit_sum_normalization():
    with pytest.raises(NormalizationError):
        solve_orbit_sum(bv(0, 1), 2)


# --- maximal degree parity -------------------------------------------------------------


def test_reaches_max_degree_examples():
    spec = ModificationSpec.from_values(5, [0b00001])
    assert spec.size == 5 and reaches_max_degree(spec)
    spec = ModificationSpec.from_values(3, [0b001])
    assert reaches_max_degree(spec) and algebraic_degree(build_from_gamma(spec)) == 3
    spec = ModificationSpec.from_values(4, [0b0001])
    assert not reaches_max_degree(spec) and algebraic_degree(build_from_gamma(spec)) < 4


# --- earlier cubic constructions ------------------------------------------------------------


def test_gao_examples():
    f = gao_cubic(6, 1)
    assert is_bent(f) and algebraic_degree(f) == 3
    assert not is_bent(gao_cubic(8, 2))
    assert is_bent(gao_cubic(10, 1))


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_gao_always_rotation_symmetric(n):
    for t in range(1, n // 2):
        assert is_rotation_symmetric(gao_cubic(n, t))


def test_gao_errors():
    with pytest.raises(ParityError):
        gao_cubic(7, 1)
    for t in (0, 3):
        with pytest.raises(ConstraintError):
            gao_cubic(6, t)


def test_gao_anf_direct():
    n, m, t = 6, 3, 1
    expected = set()
    for i in range(m):
        expected ^= {(1 << i) | (1 << (m + i))}
    for i in range(n):
        expected ^= {(1 << i) | (1 << ((t + i) % n)) | (1 << ((m + i) % n))}
        expected ^= {(1 << i) | (1 << ((t + i) % n))}
    assert anf_of(gao_cubic(n, t)).terms == expected


def test_carlet_examples():
    f = carlet_cubic(1)
    assert f == build_from_orbit_sum(delta_with_support(3, [0, 1, 2]), 3)
    assert is_bent(f) and algebraic_degree(f) == 3
    assert carlet_cubic(2) == build_from_orbit_sum(delta_with_support(6, [0, 2, 4]), 6)
    with pytest.raises(ConstraintError):
        carlet_cubic(0)


def test_provenance_is_recorded_but_ignored_in_equality():
    f = build_from_orbit_sum(bv(1, 1, 1), 3)
    assert f.provenance == {"kind": "theorem3", "m": 3, "delta": "0x7"}
    assert f == BoolFn(f.n, f.table)
