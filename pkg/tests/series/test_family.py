from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from pitelescope.arith.bigreal import BigReal
from pitelescope.arith.constants import pi_reference, sin_pi_numeric
from pitelescope.arith.poly import trim
from pitelescope.arith.surd import SurdExpr
from pitelescope.errors import DomainError, InvalidParameters
from pitelescope.series.family import (
    boundary,
    bracket,
    bracket_coefficients,
    bracket_polynomial,
    limit_value,
    ratio_factors,
    summand,
    tau,
)
from pitelescope.series.params import FamilyId, SeriesParams
from tests.strategies import series_params, t1_factor

HALF = Fraction(1, 2)


def test_tau_goldens(t1_half, t12_half):
    assert tau(t1_half, 0) == Fraction(1, 4)
    assert tau(t1_half, 1) == Fraction(9, 32)
    assert tau(t12_half, 0) == Fraction(8, 3)
    with pytest.raises(DomainError):
        tau(t1_half, -1)


def test_boundary_goldens(t1_half, t12_half, t12_half_squared):
    assert boundary(t1_half) == 0
    assert boundary(SeriesParams.build(FamilyId.T1, [HALF], [1], [1], [1])) == Fraction(1, 4)
    assert boundary(t12_half) == 2
    assert boundary(t12_half_squared) == 4


def test_boundary_with_negative_shifted_factorial():
    # (1 - x)_{-1} = 1 / (-x) at x = 7/12
    params = SeriesParams.build(FamilyId.T12, [Fraction(7, 12)], [0], [0], [2])
    expected = 1 / (Fraction(7, 12) * Fraction(19, 12) * (1 / (-Fraction(7, 12))))
    assert boundary(params) == expected


def test_summand_goldens(t1_half, t1_half_squared):
    assert summand(t1_half, 0) == Fraction(1, 4)
    assert summand(t1_half, 1) == Fraction(1, 32)
    assert summand(t1_half_squared, 0) == Fraction(1, 16)


def test_ratio_factors_scaled():
    params = SeriesParams.build(FamilyId.T1, [Fraction(1, 3)])
    assert ratio_factors(params).scaled() == ((1, 2), (3, 6), 3)


def test_bracket_coefficients_goldens(t1_half, t1_half_squared, t12_half_squared):
    assert bracket_coefficients(t1_half) == [Fraction(1, 4)]
    # (k + 1/2)^4 - (k (k + 1))^2 = (k^2 + k + 1/8) / 2
    assert bracket_coefficients(t1_half_squared) == [Fraction(1, 16), HALF, HALF]
    assert bracket_coefficients(t12_half_squared) == [Fraction(7, 16), 1, HALF]


def test_bracket_matches_coefficients(t12_half_squared):
    coefficients = bracket_coefficients(t12_half_squared)
    for k in range(5):
        value = sum(c * k**j for j, c in enumerate(coefficients))
        assert bracket(t12_half_squared, k) == value


@given(series_params())
@settings(max_examples=100, deadline=None)
def test_leading_coefficients_cancel(params):
    coefficients = bracket_coefficients(params)
    assert len(coefficients) == 2 * params.m - 1
    assert trim(coefficients) == bracket_polynomial(params)


@given(t1_factor())
@settings(max_examples=100, deadline=None)
def test_single_sine_constant(factor):
    x, p, q, r = factor
    params = SeriesParams.build(FamilyId.T1, [x], [p], [q], [r])
    assert bracket_coefficients(params) == [(p - r + x) * (1 + q - r - x)]


@given(series_params())
@settings(max_examples=100, deadline=None)
def test_summand_is_tau_difference(params):
    assert summand(params, 0) == tau(params, 0) - boundary(params)
    for k in (1, 2, 7):
        assert summand(params, k) == tau(params, k) - tau(params, k - 1)


def test_invalid_params_rejected():
    params = SeriesParams.build(FamilyId.T1, [HALF], [0], [0], [2])
    with pytest.raises(InvalidParameters):
        summand(params, 0)
    with pytest.raises(InvalidParameters):
        boundary(params)


def test_limit_value_exact(t1_half, t12_half_squared):
    limit = limit_value(t1_half)
    assert (limit.pi_exponent, limit.surd_factor) == (-1, SurdExpr.rational(1))
    assert limit_value(t12_half_squared).pi_exponent == 2

    cosecant = limit_value(SeriesParams.build(FamilyId.T12, [Fraction(1, 4)]))
    assert cosecant.surd_factor == SurdExpr.sqrt(2)
    sines = limit_value(SeriesParams.build(FamilyId.T1, [Fraction(1, 12), Fraction(5, 12)]))
    assert sines.surd_factor == Fraction(1, 4)


def test_limit_value_numeric_only():
    x = Fraction(1, 7)
    limit = limit_value(SeriesParams.build(FamilyId.T12, [x]))
    assert limit.surd_factor is None
    expected = pi_reference(128) / sin_pi_numeric(x, 128)
    assert abs(limit.numeric(128) - expected) < BigReal.epsilon(120)


def test_limit_numeric_matches_closed_form(t1_half):
    assert abs(limit_value(t1_half).numeric(128) - 1 / pi_reference(128)) < BigReal.epsilon(120)
