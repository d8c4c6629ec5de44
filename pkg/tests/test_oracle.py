import random

import pytest

from beikit import oracle
from beikit.algebra import GF32003, QQ, Polynomial, make_f, monomial
from beikit.errors import BudgetExceeded, InputError
from beikit.gbasis import edge_generators, groebner_basis
from beikit.primdec import component_ideal

from fixture_graphs import C4, K13, K3, NAMED, P3, P4, STAR3


def p(i, x):
    return (i, x)


def var(i, x, field=GF32003):
    return Polynomial.variable(i, x, field)


# ---------------------------------------------------------------- S-polynomials

def test_s_poly_self():
    f = make_f(1, 2, 1, 2)
    assert oracle.s_polynomial(f, f).is_zero()


def test_s_poly_by_hand():
    # lcm p11*p22*p23: p23*f12 - p22*f13
    f, g = make_f(1, 2, 1, 2), make_f(1, 2, 1, 3)
    expect = Polynomial({monomial(p(1, 3), p(2, 1), p(2, 2)): 1,
                         monomial(p(1, 2), p(2, 1), p(2, 3)): -1})
    assert oracle.s_polynomial(f, g) == expect


def test_s_poly_zero_rejected():
    with pytest.raises(InputError):
        oracle.s_polynomial(Polynomial({}, QQ), make_f(1, 2, 1, 2))


def test_coprime_leading_terms_reduce():
    f, g = make_f(1, 2, 1, 2), make_f(1, 2, 3, 4)
    assert oracle.reduce(oracle.s_polynomial(f, g), [f, g]).is_zero()


def test_star_basis_s_pairs():
    polys = [e.poly for e in groebner_basis(STAR3, 2, GF32003)]
    for a in range(3):
        for b in range(a + 1, 3):
            assert oracle.reduce(oracle.s_polynomial(polys[a], polys[b]), polys).is_zero()


# ---------------------------------------------------------------- Buchberger

def test_single_minor():
    f = make_f(1, 2, 1, 2, GF32003)
    assert oracle.buchberger([f]) == [f]


def test_p3_matches_structured_basis():
    gb = oracle.buchberger(edge_generators(P3, 2, GF32003))
    assert set(gb) == {e.poly for e in groebner_basis(P3, 2, GF32003)}


def test_star_reduced_basis():
    gb = oracle.buchberger(edge_generators(STAR3, 2, GF32003))
    extra = var(2, 1) * make_f(1, 2, 2, 3, GF32003)
    assert set(gb) == {make_f(1, 2, 1, 2, GF32003), make_f(1, 2, 1, 3, GF32003), extra}


@pytest.mark.parametrize("name", ["K13", "C4", "C5_zigzag", "spider5"])
def test_order_independent(name):
    gens = edge_generators(NAMED[name], 2, GF32003)
    ref = oracle.buchberger(gens)
    rng = random.Random(7)
    for _ in range(3):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert oracle.buchberger(shuffled) == ref


def test_unit_ideal():
    one = Polynomial.constant(1, GF32003)
    assert oracle.buchberger([var(1, 1), var(1, 1) + one]) == [one]


def test_rational_field():
    gb = oracle.buchberger(edge_generators(K13, 2, QQ))
    assert set(gb) == {e.poly for e in groebner_basis(K13, 2, QQ)}


def test_budget_exceeded():
    tiny = oracle.Budget(max_spairs=1)
    with pytest.raises(BudgetExceeded) as info:
        oracle.buchberger(edge_generators(C4, 3, GF32003), tiny, check="probe")
    assert info.value.check == "probe"


# ---------------------------------------------------------------- is_groebner

def test_buchberger_output_is_groebner():
    assert oracle.is_groebner(oracle.buchberger(edge_generators(P4, 3, GF32003)))


def test_two_minors_sharing_a_column_pin():
    # the S-polynomial p13*p21*p22 - p12*p21*p23 has a standard leading term
    assert not oracle.is_groebner([make_f(1, 2, 1, 2), make_f(1, 2, 1, 3)])


@pytest.mark.parametrize("name", sorted(NAMED))
def test_structured_basis_is_groebner(name):
    assert oracle.is_groebner([e.poly for e in groebner_basis(NAMED[name], 2, GF32003)])


# ---------------------------------------------------------------- ideal equality

def test_equal_under_permutation():
    gens = edge_generators(C4, 2, GF32003)
    assert oracle.ideal_equal(gens, gens[::-1])


@pytest.mark.parametrize("name", sorted(NAMED))
def test_edges_and_basis_generate_same_ideal(name):
    g = NAMED[name]
    assert oracle.ideal_equal(edge_generators(g, 2, GF32003),
                              [e.poly for e in groebner_basis(g, 2, GF32003)])


def test_distinct_variables_not_equal():
    assert not oracle.ideal_equal([var(1, 1)], [var(1, 2)])


# ---------------------------------------------------------------- intersection

def test_intersection_with_itself():
    a = edge_generators(P3, 2, GF32003)
    assert oracle.ideal_equal(oracle.ideal_intersection(a, a), a)


def test_intersection_with_unit():
    a = edge_generators(K3, 2, GF32003)
    meet = oracle.ideal_intersection(a, [Polynomial.constant(1, GF32003)])
    assert oracle.ideal_equal(meet, a)


def test_intersection_of_coordinate_ideals():
    meet = oracle.ideal_intersection([var(1, 1)], [var(1, 2)])
    assert oracle.ideal_equal(meet, [var(1, 1) * var(1, 2)])


def test_p3_components_intersect_to_edge_ideal():
    a = component_ideal(P3, (1, 3), 2).generators(GF32003)
    b = component_ideal(P3, (1, 2, 3), 2).generators(GF32003)
    meet = oracle.ideal_intersection(a, b)
    assert oracle.ideal_equal(meet, edge_generators(P3, 2, GF32003))


def test_intersection_result_has_no_auxiliary_variable():
    from beikit.algebra import AUX
    meet = oracle.ideal_intersection(edge_generators(P3, 2, GF32003), [var(1, 2), var(2, 2)])
    assert all(AUX not in q.variables() for q in meet)


def test_intersect_all_needs_input():
    with pytest.raises(InputError):
        oracle.intersect_all([])
