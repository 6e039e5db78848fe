"""Arithmetic substrate: polynomials, surds, quadratic roots."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fanoslope.errors import AllCoefficientsZero, IncomparableRadicands
from fanoslope.exactnum import Polynomial, Surd, compare, quadratic_roots, render_value

fractions_st = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
poly_st = st.lists(fractions_st, max_size=7).map(Polynomial)


# -- Polynomial ------------------------------------------------------------


def test_trailing_zeros_are_stripped():
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
    assert Polynomial([0, 0]) == Polynomial.zero()
    assert Polynomial.zero().degree == -1


def test_basic_arithmetic():
    p = Polynomial([1, 2])       # 1 + 2x
    q = Polynomial([0, 0, 3])    # 3x^2
    assert (p + q) == Polynomial([1, 2, 3])
    assert (p * q) == Polynomial([0, 0, 3, 6])
    assert (p - p) == Polynomial.zero()
    assert p * Fraction(1, 2) == Polynomial([Fraction(1, 2), 1])


def test_evaluation_at_rational_and_surd_points():
    p = Polynomial([24, 0, -3])  # -3x^2 + 24
    assert p(Fraction(2)) == 12
    assert p(Surd(0, 1, 8)) == Fraction(0)
    assert p(Surd(1, 1, 2)) == Surd(15, -6, 2)  # -3(1+sqrt2)^2 + 24


def test_differentiate_and_integrate():
    p = Polynomial([5, 0, 3])  # 5 + 3x^2
    assert p.differentiate() == Polynomial([0, 6])
    assert p.integrate_from_zero() == Polynomial([0, 5, 0, 1])
    assert p.integrate_from_zero()(Fraction(0)) == 0


@given(poly_st)
def test_integrate_then_differentiate_round_trips(p):
    assert p.integrate_from_zero().differentiate() == p


@given(poly_st, poly_st, fractions_st)
def test_evaluation_is_a_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


def test_monomial_and_coefficient_access():
    m = Polynomial.monomial(3, Fraction(2, 5))
    assert m.degree == 3
    assert m.coefficient(3) == Fraction(2, 5)
    assert m.coefficient(7) == 0


# -- Surd ------------------------------------------------------------------


def test_canonical_form_extracts_square_factors():
    s = Surd(0, 1, 8)
    assert (s.rat, s.coef, s.rad) == (0, 2, 2)
    assert Surd(3, 0, 17) == Surd(3)
    assert Surd(1, 2, 9) == Surd(7)  # 1 + 2*3


def test_sqrt_of_rational():
    assert Surd.sqrt(Fraction(9, 4)) == Surd(Fraction(3, 2))
    assert Surd.sqrt(Fraction(1, 2)) == Surd(0, Fraction(1, 2), 2)
    with pytest.raises(ValueError):
        Surd.sqrt(-1)


def test_arithmetic_in_one_quadratic_field():
    a = Surd(1, 1, 2)
    b = Surd(0, 3, 2)
    assert a + b == Surd(1, 4, 2)
    assert a * b == Surd(6, 3, 2)
    assert (a - a) == Surd(0)
    assert a * a == Surd(3, 2, 2)
    assert (a / a) == Surd(1)
    assert Fraction(1, 2) + b == Surd(Fraction(1, 2), 3, 2)
    assert 2 * a == Surd(2, 2, 2)


def test_mixing_radicands_raises():
    with pytest.raises(IncomparableRadicands):
        Surd(0, 1, 2) + Surd(0, 1, 3)
    with pytest.raises(IncomparableRadicands):
        Surd(0, 1, 2) * Surd(0, 1, 5)
    with pytest.raises(IncomparableRadicands):
        compare(Surd(0, 1, 2), Surd(0, 1, 3))


def test_sign_analysis_opposite_parts():
    assert Surd(-2, 1, 2).sign() == -1   # sqrt2 < 2
    assert Surd(-1, 1, 2).sign() == 1    # sqrt2 > 1
    assert Surd(2, -1, 2).sign() == 1
    assert Surd(1, -1, 2).sign() == -1
    assert Surd(0).sign() == 0


def test_compare_and_rich_ordering():
    assert compare(Surd(0, 1, 8), 3) < 0
    assert compare(3, Surd(0, 1, 8)) > 0
    assert compare(Fraction(5, 2), Fraction(5, 2)) == 0
    assert Surd(0, 1, 2) < Surd(0, 1, 8)
    assert Surd(0, 1, 2) <= Fraction(3, 2)
    assert Fraction(1) < Surd(0, 1, 2)


def test_rational_surds_hash_like_fractions():
    assert hash(Surd(Fraction(7, 3))) == hash(Fraction(7, 3))
    assert Surd(Fraction(7, 3)) == Fraction(7, 3)


surd_st = st.builds(
    Surd,
    fractions_st,
    st.fractions(min_value=-9, max_value=9, max_denominator=6),
    st.just(2),
)


@given(surd_st, surd_st, surd_st)
def test_comparison_is_a_total_order(a, b, c):
    assert compare(a, b) == -compare(b, a)
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0
    assert (compare(a, b) == 0) == (a == b)


@given(surd_st, surd_st)
def test_field_operations_respect_float_shadow(a, b):
    # coarse but independent: exact ops track the float approximations
    assert abs(float(a + b) - (float(a) + float(b))) < 1e-6
    assert abs(float(a * b) - (float(a) * float(b))) < 1e-6


# -- quadratic_roots -------------------------------------------------------


def test_roots_of_isolated_example():
    roots = quadratic_roots(-3, 0, 24)
    assert roots == (Surd(0, -2, 2), Surd(0, 2, 2))
    assert compare(roots[0], roots[1]) < 0


def test_roots_degenerate_cases():
    assert quadratic_roots(1, 0, 1) == ()
    assert quadratic_roots(1, -2, 1) == (Surd(1),)
    assert quadratic_roots(0, 2, -5) == (Surd(Fraction(5, 2)),)
    assert quadratic_roots(0, 0, 7) == ()
    with pytest.raises(AllCoefficientsZero):
        quadratic_roots(0, 0, 0)


@given(
    st.fractions(min_value=-8, max_value=8, max_denominator=5),
    st.fractions(min_value=-8, max_value=8, max_denominator=5),
    st.fractions(min_value=-8, max_value=8, max_denominator=5),
)
def test_roots_actually_solve_the_quadratic(a, b, c):
    if a == b == c == 0:
        return
    for root in quadratic_roots(a, b, c):
        value = a * root * root + b * root + c
        assert compare(value, 0) == 0


def test_render_value():
    assert render_value(Fraction(18, 5)) == "18/5"
    assert render_value(Surd(0, 2, 2)) == "2*sqrt(2)"
    assert render_value(Surd(Fraction(-1, 1000), 2, 2)) == "-1/1000 + 2*sqrt(2)"
    assert render_value(Surd(3, -1, 5)) == "3 - sqrt(5)"
    assert render_value(4) == "4"
