from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from pitelescope.arith.poly import interpolate, linear_product, poly_eval, poly_mul, poly_sub, trim

coefficients = st.lists(
    st.fractions(min_value=-10, max_value=10, max_denominator=12), min_size=1, max_size=7
)


def test_linear_product():
    assert linear_product([1, 2]) == [2, 3, 1]
    assert linear_product([]) == [1]


def test_trim_and_sub():
    assert trim(poly_sub(linear_product([1, 1]), [0, 2, 1])) == [1]
    assert trim([Fraction(0), Fraction(0)]) == []


def test_interpolate_known_polynomial():
    # k^2 + k + 1/8 at k = 0, 1, 2
    values = [Fraction(1, 8), Fraction(17, 8), Fraction(49, 8)]
    assert interpolate(values) == [Fraction(1, 8), 1, 1]


@given(coefficients)
@settings(max_examples=100, deadline=None)
def test_interpolate_recovers_coefficients(poly):
    values = [poly_eval(poly, k) for k in range(len(poly))]
    assert interpolate(values) == poly


@given(coefficients, coefficients, st.integers(-5, 5))
@settings(max_examples=100, deadline=None)
def test_product_evaluates_pointwise(a, b, k):
    assert poly_eval(poly_mul(a, b), k) == poly_eval(a, k) * poly_eval(b, k)
