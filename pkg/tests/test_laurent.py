import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hypercert.errors import InputError
from hypercert.laurent import (
    LaurentPoly, MonomialUnit, borel_check, det_laurent, det_poly_in_g, linear_form, substitute_monomials,
)
from hypercert.scalar import as_scalar, root_of_unity

x = LaurentPoly.variable(0, 1)


def poly(dim, terms):
    return LaurentPoly(dim, terms)


@st.composite
def polys(draw, dim=2):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        e = tuple(draw(st.integers(-2, 2)) for _ in range(dim))
        terms[e] = draw(st.integers(-5, 5))
    return LaurentPoly(dim, terms)


def test_arithmetic_examples():
    assert (1 - x) * (1 + x) == 1 - x ** 2
    p = 3 * x ** 2 - x
    assert (p + (-p)).is_zero() and len(p - p) == 0
    assert x ** -1 * x == 1


def test_determinant_examples():
    assert det_laurent([[LaurentPoly.constant(1, 1), x], [x, x ** 2]]).is_zero()
    M = [[1 - x, 1 - x ** 2], [LaurentPoly.constant(-2, 1), -1 - x]]
    assert det_laurent(M) == 1 - x ** 2
    one, zero = LaurentPoly.constant(1, 1), LaurentPoly.zero(1)
    assert det_laurent([[one, zero], [zero, one]]) == 1


def test_evaluate():
    assert (1 - x ** 2).evaluate([2]) == -3
    assert (1 - x ** 2).evaluate([-1]) == 0
    p = poly(2, {(1, -1): 3, (0, 2): -4, (0, 0): 7})
    assert p.evaluate([1, 1]) == 6
    with pytest.raises(ZeroDivisionError):
        (x ** -1).evaluate([0])


def test_text_round_trip():
    p = poly(2, {(1, -1): 3, (0, 2): root_of_unity(3), (0, 0): -7})
    assert LaurentPoly.from_text(p.to_text()) == p
    assert LaurentPoly.from_text(LaurentPoly.zero(3).to_text(), dim=3).is_zero()


def test_borel_examples():
    assert borel_check([MonomialUnit(2, (1, 0)), MonomialUnit(-2, (1, 0))]).groups == ((0, 1),)
    res = borel_check([MonomialUnit(1, (1, 0)), MonomialUnit(1, (0, 1))])
    assert not res.is_zero and res.groups == ((1,), (0,))
    z = root_of_unity(3)
    assert borel_check([MonomialUnit(1, (1,)), MonomialUnit(z, (1,)), MonomialUnit(z * z, (1,))]).is_zero


def test_substitution_examples():
    X1, X2 = LaurentPoly.variable(0, 2), LaurentPoly.variable(1, 2)
    units = [MonomialUnit(1, (1, 0)), MonomialUnit(1, (0, 1))]
    assert substitute_monomials(X1 * X2 - X2 * X1, units).is_zero()
    assert substitute_monomials(X1 - X2, units) == poly(2, {(1, 0): 1, (0, 1): -1})
    dependent = [MonomialUnit(1, (1,)), MonomialUnit(1, (2,))]
    assert substitute_monomials(X1 ** 2 - X2, dependent).is_zero()
    with pytest.raises(InputError):
        substitute_monomials(X1, units[:1])


def test_det_poly_in_g():
    g0, g1 = LaurentPoly.variable(0, 2), LaurentPoly.variable(1, 2)
    zero = LaurentPoly.zero(2)
    assert det_poly_in_g([[g0, zero], [zero, g1]]) == g0 * g1
    row = [linear_form([1, 2]), linear_form([3, -1])]
    assert det_poly_in_g([row, row]).is_zero()


def test_unit_rejects_zero_constant():
    with pytest.raises(InputError):
        MonomialUnit(0, (1,))


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    point = [as_scalar(2), as_scalar(-3)]
    assert (p * q + r).evaluate(point) == p.evaluate(point) * q.evaluate(point) + r.evaluate(point)


def test_determinant_against_leibniz():
    rng = random.Random(11)
    for n in range(1, 5):
        M = [[LaurentPoly(2, {(rng.randint(-1, 1), rng.randint(-1, 1)): rng.randint(-3, 3)
                              for _ in range(2)}) for _ in range(n)] for _ in range(n)]
        assert det_laurent(M) == oracles.leibniz_det(M)
