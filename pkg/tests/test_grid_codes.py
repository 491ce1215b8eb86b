"""Grid geometry, the staircase monomial set, and code construction."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlrc import (
    Monomial,
    build_code,
    build_grid,
    coset_distance_formula,
    delta_perp_set,
    delta_set,
    delta_size_formula,
    evaluate,
    impurity_predicate,
    locality_formula,
    make_delta_params,
    make_field,
    make_grid_params,
    min_distance_bruteforce,
    min_distance_formula,
    monomial_distance,
    quantum_dimension_formula,
    record_to_json,
    twist_vector,
    valid_a_values,
    valid_b_values,
    weight,
    witness_polynomial,
)
from qlrc.errors import (
    DivisibilityViolated,
    ExponentOutOfRange,
    ParamRangeViolated,
)

_SHAPES = [(H, V, a, b)
           for H in range(3, 14)
           for V in range(3, 14)
           for a in valid_a_values(H)
           for b in valid_b_values(V)]


def test_build_grid_points(gf5, gf3, gf8):
    g = make_grid_params(5, 3, gf5)
    pts = build_grid(g)
    assert [p[0] for p in pts[::3]] == [0, 2, 4, 3, 1]
    assert [p[1] for p in pts[:3]] == [0, 4, 1]
    assert pts[1 * 3 + 2] == (2, 1)  # index i*V + j

    g3 = make_grid_params(3, 3, gf3)
    assert [p[0] for p in build_grid(g3)[::3]] == [0, 2, 1]

    g8 = make_grid_params(8, 8, gf8)
    assert [p[0] for p in build_grid(g8)[::8]] == [0, 2, 4, 3, 6, 7, 5, 1]


def test_grid_param_errors(gf5, gf2):
    with pytest.raises(DivisibilityViolated):
        make_grid_params(4, 3, gf5)
    with pytest.raises(ParamRangeViolated):
        make_grid_params(2, 3, gf5)
    with pytest.raises(ParamRangeViolated):
        make_grid_params(3, 3, gf2)  # q must be at least 3


def test_ab_validation(gf5, gf4):
    g = make_grid_params(5, 3, gf5)
    make_delta_params(g, 1, 0)
    with pytest.raises(ParamRangeViolated):
        make_delta_params(g, 2, 0)  # a < h = 2
    with pytest.raises(ParamRangeViolated):
        make_delta_params(g, 0, 1)  # b < v = 1
    with pytest.raises(ParamRangeViolated):
        make_delta_params(g, -1, 0)
    g4 = make_grid_params(4, 4, gf4)
    with pytest.raises(ParamRangeViolated):
        make_delta_params(g4, 0, 1)  # even H-1 forces a >= 1


def test_valid_ranges():
    assert valid_a_values(5) == [0, 1]
    assert valid_a_values(4) == [1]
    assert valid_a_values(3) == [0]
    assert valid_b_values(3) == [0]
    assert valid_b_values(8) == [1, 2, 3]


def test_delta_sets_ex1():
    d = delta_set(5, 3, 0, 0)
    assert sorted((m.i, m.j) for m in d) == [
        (0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (4, 0)]
    dp = delta_perp_set(5, 3, 0, 0)
    assert sorted((m.i, m.j) for m in dp) == [
        (0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (3, 0), (4, 0)]
    assert dp < d


def test_delta_sets_rem3():
    d = delta_set(3, 3, 0, 0)
    assert sorted((m.i, m.j) for m in d) == [
        (0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    dp = delta_perp_set(3, 3, 0, 0)
    assert sorted((m.i, m.j) for m in dp) == [(0, 0), (0, 1), (1, 0), (2, 0)]


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(_SHAPES))
def test_delta_size_formula_matches_enumeration(shape):
    H, V, a, b = shape
    assert len(delta_set(H, V, a, b)) == delta_size_formula(H, V, a, b)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(_SHAPES))
def test_delta_perp_is_reflection_complement(shape):
    H, V, a, b = shape
    d = delta_set(H, V, a, b)
    dp = delta_perp_set(H, V, a, b)
    for i in range(H):
        for j in range(V):
            reflected_out = Monomial(H - 1 - i, V - 1 - j) not in d
            assert (Monomial(i, j) in dp) == reflected_out


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(_SHAPES))
def test_dimension_identities(shape):
    H, V, a, b = shape
    size = delta_size_formula(H, V, a, b)
    k = quantum_dimension_formula(H, V, a, b)
    assert 2 * size - H * V == k
    assert k == (2 * a + H % 2) * (2 * b + V % 2)
    assert len(delta_perp_set(H, V, a, b)) == H * V - size


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(_SHAPES))
def test_distance_formulas_from_monomials(shape):
    H, V, a, b = shape
    d = delta_set(H, V, a, b)
    dp = delta_perp_set(H, V, a, b)
    assert min(monomial_distance(m, H, V) for m in d) == \
        min_distance_formula(H, V, a, b)
    assert min(monomial_distance(m, H, V) for m in d - dp) == \
        coset_distance_formula(H, V, a, b)


def test_monomial_distance_bounds():
    assert monomial_distance(Monomial(0, 0), 5, 3) == 15
    assert monomial_distance(Monomial(4, 2), 5, 3) == 1
    with pytest.raises(ExponentOutOfRange):
        monomial_distance(Monomial(5, 0), 5, 3)
    with pytest.raises(ExponentOutOfRange):
        monomial_distance(Monomial(0, -1), 5, 3)


def test_evaluate_known_polynomials(gf5):
    g = make_grid_params(5, 3, gf5)
    pts = build_grid(g)
    # X^4 - 1 vanishes off the x = 0 line
    vec = evaluate(gf5, {Monomial(4, 0): 1, Monomial(0, 0): 4}, pts, 5, 3)
    assert weight(vec.values) == 3
    assert list(np.nonzero(vec.values)[0]) == [0, 1, 2]
    vec_x = evaluate(gf5, {Monomial(1, 0): 1}, pts, 5, 3)
    assert weight(vec_x.values) == 12


def test_twist_vector_ex1(gf5):
    g = make_grid_params(5, 3, gf5)
    assert list(twist_vector(g)) == [1, 2, 2] * 5


def test_plain_dual_flags(ex1_record, rem3_record, ex1e_record, grid55_record):
    assert not ex1_record.plain_dual
    assert rem3_record.plain_dual
    assert ex1e_record.plain_dual
    assert grid55_record.plain_dual


def test_ex1_record_numbers(ex1_record):
    rec = ex1_record
    assert (rec.n, rec.k) == (15, 8)
    assert rec.mirror_code.k == 7
    assert rec.d_formula == 3
    assert rec.coset_d_formula == 6
    assert rec.locality == (2, 2)
    assert rec.impure
    assert len(rec.delta) == 8


def test_ex1e_record_numbers(ex1e_record):
    rec = ex1e_record
    assert (rec.n, rec.k) == (64, 34)
    assert rec.d_formula == 6
    assert rec.coset_d_formula == 16
    assert rec.locality == (5, 4)
    assert rec.impure


def test_gf4_instance_is_pure(gf4):
    g = make_grid_params(4, 4, gf4)
    rec = build_code(g, make_delta_params(g, 1, 1))
    assert (rec.n, rec.k) == (16, 10)
    assert rec.d_formula == 4
    assert rec.coset_d_formula == 4
    assert not rec.impure
    assert min_distance_bruteforce(rec.code) == 4


def test_witness_polynomial_ex1(gf5, ex1_record):
    g = make_grid_params(5, 3, gf5)
    poly = witness_polynomial(g, make_delta_params(g, 0, 0))
    assert poly == {Monomial(1, 1): 3, Monomial(2, 1): 1}
    assert weight(ex1_record.witness) == ex1_record.coset_d_formula


def test_impurity_predicate_examples():
    assert impurity_predicate(5, 3, 0, 0)
    assert impurity_predicate(3, 3, 0, 0)
    assert impurity_predicate(8, 8, 1, 1)
    assert not impurity_predicate(4, 4, 1, 1)


def test_locality_formula_examples():
    assert locality_formula(5, 3, 0, 0) == (2, 2)
    assert locality_formula(8, 8, 1, 1) == (5, 4)
    assert locality_formula(5, 5, 0, 0) == (3, 3)


def test_record_json_keys(ex1_record):
    data = record_to_json(ex1_record)
    assert set(data) == {"H", "V", "q", "a", "b", "field", "delta", "n", "k",
                         "d_formula", "coset_d_formula", "locality", "impure"}
    assert data["n"] == 15 and data["k"] == 8
    assert data["locality"] == [2, 2]
    assert len(data["delta"]) == 8


def test_mirror_code_is_subcode(ex1_record, ex1e_record):
    from qlrc import contains

    for rec in (ex1_record, ex1e_record):
        assert contains(rec.code, rec.mirror_code)


def test_build_code_respects_field_choice():
    f9 = make_field(3, 2, primitive=4)
    g = make_grid_params(3, 3, f9)
    rec = build_code(g, make_delta_params(g, 0, 0))
    assert rec.grid.q == 9
    assert (rec.n, rec.k) == (9, 5)
