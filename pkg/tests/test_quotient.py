"""Staircase quotients against brute-force oracles.

The census oracle enumerates a whole coordinate box and filters by ideal
membership; the action oracle multiplies in the polynomial ring and drops
terms lying in the ideal.  Both avoid the shift tables used by the module
itself.
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from artquot.instances import sample_ideals
from artquot.linalg import Subspace, mat_mul
from artquot.quotient import (
    HilbertSeries,
    QuotientModule,
    act,
    annihilator,
    build_quotient,
    hilbert,
    ideal_times_module,
    is_gorenstein,
    monomial_span,
    poly_action_matrix,
    positive_degree_span,
    socle,
    staircase,
    subspace_monomials,
)
from artquot.ring import (
    AlgebraError,
    NotArtinianError,
    Polynomial,
    VariableSet,
    ev_add,
    grlex_key,
    parse_input,
    parse_polynomial,
    poly_monomial,
    variable_polys,
)

STAIR11 = "ring x,y; ideal x^4, x^3*y, x^2*y^2, x*y^3, y^5"
FLAT7 = "ring x,y; ideal x^4, x^3*y, y^2"


def module_from(text):
    return QuotientModule(*parse_input(text))


def census_staircase(variables, ideal):
    bounds = [
        max(g[i] for g in ideal.min_gens) for i in range(variables.n)
    ]
    cells = [
        e
        for e in product(*(range(b + 1) for b in bounds))
        if not ideal.contains(e)
    ]
    return sorted(cells, key=grlex_key)


def act_oracle(module, poly, vec):
    out = [Fraction(0)] * module.dim
    for e_b, c_b in zip(module.basis, vec):
        if not c_b:
            continue
        for e_p, c_p in poly.sorted_terms():
            prod = ev_add(e_p, e_b)
            if module.ideal.contains(prod):
                continue
            out[module.index[prod]] += c_p * c_b
    return tuple(out)


def test_known_staircase_and_hilbert():
    m = module_from(STAIR11)
    assert m.dim == 11
    assert m.labels() == [
        "1", "x", "y", "x^2", "x*y", "y^2",
        "x^3", "x^2*y", "x*y^2", "y^3", "y^4",
    ]
    assert hilbert(m).coeffs == (1, 2, 3, 4, 1)
    assert hilbert(m).total() == 11


def test_second_known_staircase():
    m = module_from(FLAT7)
    assert m.dim == 7
    assert hilbert(m).coeffs == (1, 2, 2, 2)


def test_staircase_matches_census_on_samples():
    for _, variables, ideal in sample_ideals(60, seed=11):
        assert staircase(variables, ideal) == census_staircase(variables, ideal)


def test_var_action_tables_match_ring_multiplication():
    for _, variables, ideal in sample_ideals(30, seed=12):
        m = QuotientModule(variables, ideal)
        for i in range(m.n):
            step = tuple(int(j == i) for j in range(m.n))
            for b, e in enumerate(m.basis):
                target = ev_add(e, step)
                slot = m.var_action[i][b]
                if ideal.contains(target):
                    assert slot is None
                else:
                    assert m.basis[slot] == target


def random_poly(rng, n, terms=4):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, 2) for _ in range(n))
        out[e] = out.get(e, 0) + rng.randint(-2, 2)
    return Polynomial(out)


def test_act_matches_oracle_on_random_elements():
    rng = random.Random(3)
    for _, variables, ideal in sample_ideals(25, seed=13):
        m = QuotientModule(variables, ideal)
        for _ in range(4):
            poly = random_poly(rng, m.n)
            vec = tuple(Fraction(rng.randint(-2, 2)) for _ in range(m.dim))
            assert act(m, poly, vec) == act_oracle(m, poly, vec)


def test_action_matrix_columns_are_basis_images():
    m = module_from(FLAT7)
    poly = parse_polynomial("x*y + 2", m.variables)
    mat = poly_action_matrix(m, poly)
    for b, e in enumerate(m.basis):
        col = tuple(row[b] for row in mat)
        assert col == act(m, poly, m.basis_element(e))


def test_action_matrices_commute():
    m = module_from(STAIR11)
    xs = [poly_action_matrix(m, p) for p in variable_polys(m.n)]
    assert mat_mul(xs[0], xs[1]) == mat_mul(xs[1], xs[0])


def test_annihilator_of_defining_ideal_is_everything():
    m = module_from(FLAT7)
    gens = [poly_monomial(g) for g in m.ideal.min_gens]
    assert annihilator(m, gens).dim == m.dim


def test_socle_of_known_modules():
    m = module_from(STAIR11)
    s = socle(m)
    assert s.dim == 4
    assert subspace_monomials(m, s) == [(3, 0), (2, 1), (1, 2), (0, 4)]
    assert not is_gorenstein(m)
    assert is_gorenstein(module_from("ring x,y; ideal x^2, y^2"))


def test_ideal_times_module_known_value():
    m = module_from(STAIR11)
    gens = [poly_monomial((3, 0)), poly_monomial((0, 4))]
    space = ideal_times_module(m, gens)
    assert subspace_monomials(m, space) == [(3, 0), (0, 4)]


def test_positive_degree_span_counts_everything_but_one():
    for _, variables, ideal in sample_ideals(20, seed=14):
        m = QuotientModule(variables, ideal)
        assert positive_degree_span(m).dim == m.dim - 1


def test_monomial_span_round_trip():
    m = module_from(FLAT7)
    exps = [(3, 0), (1, 1)]
    span = monomial_span(m, exps)
    assert subspace_monomials(m, span) == sorted(exps, key=grlex_key)
    mixed = Subspace(m.dim, [m.element({(3, 0): 1, (1, 1): 1})])
    assert subspace_monomials(m, mixed) is None


def test_element_helpers():
    m = module_from(FLAT7)
    v = m.element({(1, 0): Fraction(1, 2), (0, 1): -1})
    assert m.element_str(v) == "1/2*x - y"
    assert m.element_str(m.zero_element()) == "0"
    with pytest.raises(AlgebraError):
        m.basis_element((9, 9))


def test_unit_ideal_is_rejected():
    with pytest.raises(AlgebraError):
        module_from("ring x,y; ideal 1")


def test_non_artinian_ideal_is_rejected():
    variables, ideal = parse_input("ring x,y; ideal x^2")
    with pytest.raises(NotArtinianError):
        build_quotient(variables, ideal)


def test_arity_mismatch_is_rejected():
    _, ideal = parse_input("ring x,y; ideal x^2, y^2")
    with pytest.raises(AlgebraError):
        QuotientModule(VariableSet(("x",)), ideal)


def test_hilbert_series_formatting():
    assert str(HilbertSeries((1, 2, 3, 4, 1))) == "1 + 2t + 3t^2 + 4t^3 + t^4"
    assert str(HilbertSeries((0, 0, 0, 2))) == "2t^3"
    assert str(HilbertSeries(())) == "0"
    with pytest.raises(AlgebraError):
        HilbertSeries((1, 0))
    with pytest.raises(AlgebraError):
        HilbertSeries((-1,))


def test_hilbert_from_degrees():
    hs = HilbertSeries.from_degrees([0, 1, 1, 3])
    assert hs.coeffs == (1, 2, 0, 1)
    assert HilbertSeries.from_degrees([]).coeffs == ()
