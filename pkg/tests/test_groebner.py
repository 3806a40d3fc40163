import itertools
import random

import pytest

from qhsing.grading import find_weights, weighted_degree
from qhsing.groebner import (
    INFINITE,
    GroebnerDegreeError,
    MonomialOrder,
    buchberger,
    normal_form,
    s_polynomial,
    standard_monomials,
)
from qhsing.poly import Polynomial

from conftest import P, random_qh

GREVLEX = MonomialOrder.grevlex(3)


def gb_of(texts, order=GREVLEX):
    return buchberger([P(t) for t in texts], order)


def assert_certificate(gb):
    for p, q in itertools.combinations(gb.generators, 2):
        assert normal_form(s_polynomial(p, q, gb.order), gb).is_zero()


def assert_reduced(gb):
    leads = gb.leading_monomials()
    for g, lm in zip(gb.generators, leads):
        assert gb.order.leading_coefficient(g) == 1
        for other in leads:
            if other is lm:
                continue
            assert not any(all(a <= b for a, b in zip(other, e)) for e, _ in g.items())


def test_order_is_grevlex_for_unit_weights():
    o = GREVLEX
    # x*z^2 < y^3 < x^2*y < x^3 in grevlex
    chain = [(1, 0, 2), (0, 3, 0), (2, 1, 0), (3, 0, 0)]
    assert sorted(chain, key=o.key) == chain


def test_monomial_ideal_scaled():
    gb = gb_of(["3*x^2", "3*y^2", "3*z^2"])
    assert set(gb.generators) == {P("x^2"), P("y^2"), P("z^2")}


def test_unit_ideal():
    gb = gb_of(["1"])
    assert gb.generators == (P("1"),) and gb.is_unit_ideal()
    assert len(standard_monomials(gb)) == 0
    gb = gb_of(["x+1", "x"])
    assert gb.generators == (P("1"),)


def test_zero_ideal_flagged():
    gb = buchberger([Polynomial.zero(3)], GREVLEX)
    assert gb.zero_ideal and gb.generators == ()
    assert standard_monomials(gb) == INFINITE


def test_curve_is_not_zero_dimensional():
    gb = gb_of(["y-x^2", "z-x^3"])
    assert_certificate(gb)
    assert standard_monomials(gb) == INFINITE


def test_normal_form_examples():
    gb = gb_of(["x"])
    assert normal_form(P("x^2"), gb).is_zero()
    assert normal_form(P("x^2+y"), gb) == P("y")
    gb = gb_of(["3*x^2", "3*y^2", "3*z^2"])
    assert normal_form(P("x^3"), gb).is_zero()


def _box_count(bounds, leads):
    return [e for e in itertools.product(*(range(b) for b in bounds))
            if not any(all(a <= b for a, b in zip(lm, e)) for lm in leads)]


def test_standard_monomials_monomial_ideals():
    sm = standard_monomials(gb_of(["x^2", "y^2", "z^2"]))
    assert set(sm.monomials) == set(itertools.product((0, 1), repeat=3))
    sm = standard_monomials(gb_of(["x", "y^2", "z^4"]))
    expected = {(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1), (0, 0, 2), (0, 1, 2), (0, 0, 3), (0, 1, 3)}
    assert set(sm.monomials) == expected and len(sm) == 8
    assert list(sm.monomials) == sorted(sm.monomials, key=GREVLEX.key)
    assert standard_monomials(gb_of(["2*x*y", "x^2", "2*z"])) == INFINITE


def test_standard_monomials_closed_under_division():
    gb = buchberger(P("x^4+y^4+z^4+x^2*y*z").gradient(), GREVLEX)
    sm = set(standard_monomials(gb).monomials)
    for e in sm:
        for i in range(3):
            if e[i]:
                assert e[:i] + (e[i] - 1,) + e[i + 1:] in sm


def test_degree_cap_is_a_hard_error():
    with pytest.raises(GroebnerDegreeError):
        buchberger([P("x^2*y - z"), P("x*y^2 - z")], GREVLEX, max_degree=3)


def _random_triangular(rng, n=3):
    """x_i^(a_i) + random terms of lower total degree: quotient dimension is prod(a_i)."""
    gens, dims = [], 1
    for i in range(n):
        a = rng.randint(1, 3)
        dims *= a
        terms = {tuple(a if j == i else 0 for j in range(n)): 1}
        for _ in range(rng.randint(1, 3)):
            e = [0] * n
            for _ in range(rng.randint(0, a - 1)):
                e[rng.randrange(n)] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + rng.randint(-3, 3)
        gens.append(Polynomial(n, terms))
    return gens, dims


def test_order_independence_of_quotient_dimension():
    rng = random.Random(3)
    for _ in range(12):
        gens, expected = _random_triangular(rng)
        weights = tuple(rng.randint(1, 4) for _ in range(3))
        for order in (GREVLEX, MonomialOrder(weights)):
            gb = buchberger(gens, order)
            assert_certificate(gb)
            assert_reduced(gb)
            for g in gens:
                assert normal_form(g, gb).is_zero()
            assert len(standard_monomials(gb)) == expected


def test_random_jacobian_ideals():
    rng = random.Random(11)
    for _ in range(15):
        f = random_qh(rng, rng.choice((3, 4)))
        g = find_weights(f)
        order = MonomialOrder(g.weights)
        gb = buchberger(f.gradient(), order)
        assert_certificate(gb)
        assert_reduced(gb)
        for d in f.gradient():
            assert normal_form(d, gb).is_zero()
        # graded consistency: every basis element is weighted-homogeneous
        for p in gb.generators:
            assert len({weighted_degree(e, g) for e, _ in p.items()}) == 1
        sm = standard_monomials(gb)
        if sm != INFINITE:
            plain = standard_monomials(buchberger(f.gradient(), MonomialOrder.grevlex(f.nvars)))
            assert len(plain) == len(sm)


def test_deterministic_output():
    gens = P("x^4+y^4+z^4+x^2*y*z").gradient()
    a = buchberger(gens, GREVLEX)
    b = buchberger(list(gens), GREVLEX)
    assert [str(p) for p in a] == [str(p) for p in b]
