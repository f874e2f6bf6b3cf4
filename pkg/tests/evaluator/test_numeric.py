from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pitelescope.arith.bigreal import BigReal
from pitelescope.arith.constants import pi_reference
from pitelescope.arith.surd import SurdExpr
from pitelescope.errors import DomainError, InvalidParameters, PrecisionExhausted
from pitelescope.evaluator import numeric
from pitelescope.evaluator.exact import partial_sum_exact, telescoped_partial_sum
from pitelescope.evaluator.numeric import (
    bits_for_digits,
    digits_for_tolerance,
    extrapolate_tau,
    levels_for_digits,
    richardson_limit,
    richardson_table,
    sum_direct,
    sum_telescoped,
    tau_numeric_sequence,
    verify_identity,
)
from pitelescope.evaluator.report import Method
from pitelescope.series.family import LimitSpec, tau
from pitelescope.series.params import FamilyId, SeriesParams
from tests.strategies import series_params

TWELVE_DIGITS = Fraction(1, 10**12)


def test_precision_helpers():
    assert bits_for_digits(10) == 66
    assert levels_for_digits(1) == 5
    assert levels_for_digits(10) == 10
    assert levels_for_digits(40) == 14
    assert digits_for_tolerance(BigReal.from_fraction(Fraction(1, 10**10), 128)) == 10
    with pytest.raises(DomainError):
        bits_for_digits(0)


def test_tau_sequence_matches_exact(t12_half_squared):
    nodes = [0, 3, 17]
    values = tau_numeric_sequence(t12_half_squared, nodes, 128)
    for n, value in zip(nodes, values):
        assert abs(value - tau(t12_half_squared, n)) < BigReal.epsilon(110)


def test_richardson_table_removes_first_order_term():
    values = [BigReal.from_fraction(1 + Fraction(1, n), 128) for n in (16, 32, 64)]
    table = richardson_table(values)
    assert [len(row) for row in table] == [1, 2, 3]
    assert abs(table[1][1] - 1) < BigReal.epsilon(120)
    assert abs(table[2][2] - 1) < BigReal.epsilon(120)


def test_extrapolate_tau(t1_half):
    best, spread = extrapolate_tau(t1_half, 16, 8, 128)
    assert abs(best - 1 / pi_reference(128)) < TWELVE_DIGITS
    assert spread < Fraction(1, 10**10)
    with pytest.raises(DomainError):
        extrapolate_tau(t1_half, 16, 1, 128)
    with pytest.raises(DomainError):
        extrapolate_tau(t1_half, 2, 8, 128)


def test_richardson_one_over_pi(t1_half):
    report = richardson_limit(t1_half, levels=10, precision=128, tolerance=TWELVE_DIGITS)
    assert report.method is Method.RICHARDSON
    assert report.work == 10
    assert report.passed
    assert report.abs_error < TWELVE_DIGITS
    assert abs(report.approximation - 1 / pi_reference(128)) < TWELVE_DIGITS


def test_richardson_subtracts_boundary(t12_half_squared):
    report = richardson_limit(t12_half_squared, levels=10, precision=128)
    expected = pi_reference(128) ** 2 - 4
    assert abs(report.approximation - expected) < TWELVE_DIGITS
    assert abs(report.target - expected) < BigReal.epsilon(100)


def test_richardson_coarse_estimate(t1_half):
    report = richardson_limit(t1_half, levels=2, precision=128)
    assert report.error_estimate > Fraction(1, 10**4)


def test_richardson_rejects_invalid():
    params = SeriesParams.build(FamilyId.T1, [Fraction(1, 2)], [0], [0], [2])
    with pytest.raises(InvalidParameters):
        richardson_limit(params)


def test_verify_identity_passes(t1_half_squared):
    report = verify_identity(t1_half_squared, 128, TWELVE_DIGITS)
    assert report.passed
    assert report.tolerance <= TWELVE_DIGITS * 2


def test_verify_identity_negative_control(t1_half, monkeypatch):
    def perturbed(params):
        return LimitSpec(params.family, -1, SurdExpr.rational(Fraction(1001, 1000)), params.x)

    monkeypatch.setattr(numeric, "limit_value", perturbed)
    report = verify_identity(t1_half, 128, Fraction(1, 10**8))
    assert not report.passed
    assert report.abs_error > Fraction(1, 10**4)


def test_sum_direct_tail_estimate(t1_half):
    report = sum_direct(t1_half, 96, 1000, tolerance=Fraction(1, 10**3))
    assert report.method is Method.DIRECT
    assert report.work == 1000
    assert report.passed
    ratio = report.abs_error.to_float() / report.error_estimate.to_float()
    assert 0.5 < ratio < 2


@pytest.mark.parametrize("fixture", ["t1_half", "t12_half"])
@pytest.mark.parametrize("terms", [1, 40, 1000])
def test_sum_direct_equals_partial_sum(request, fixture, terms):
    params = request.getfixturevalue(fixture)
    report = sum_direct(params, 128, terms)
    exact = partial_sum_exact(params, terms - 1)
    assert exact == telescoped_partial_sum(params, terms - 1)
    assert abs(report.approximation - exact) <= Fraction(1, 2**100)


def test_sum_telescoped_matches_direct(t1_half):
    direct = sum_direct(t1_half, 96, 1000)
    telescoped = sum_telescoped(t1_half, 96, 1000)
    assert telescoped.method is Method.TELESCOPED
    assert abs(direct.approximation - telescoped.approximation) < Fraction(1, 10**20)
    assert telescoped.error_estimate > 0


def test_direct_rejects_empty_sum(t1_half):
    with pytest.raises(DomainError):
        sum_direct(t1_half, 96, 0)


@pytest.mark.slow
def test_direct_tail_is_first_order(t1_half_squared):
    half = sum_direct(t1_half_squared, 192, 50_000)
    full = sum_direct(t1_half_squared, 192, 100_000)
    relative = full.abs_error.to_float() / full.target.to_float()
    assert relative < 1e-4
    ratio = half.abs_error.to_float() / full.abs_error.to_float()
    assert 1.7 <= ratio <= 2.3


def test_report_json(t1_half):
    report = richardson_limit(t1_half, levels=6, precision=96).with_label("t1.half")
    data = report.to_json(12)
    assert list(data) == ["id", "pass", "approx", "target", "abs_error", "method", "work", "millis"]
    assert data["id"] == "t1.half"
    assert data["method"] == "richardson"
    assert data["target"].startswith("0.3183098861")


def test_abs_error_measured_before_rounding(t1_half, monkeypatch):
    def nudged(params):
        factor = SurdExpr.rational(1 + Fraction(1, 2**20))
        return LimitSpec(params.family, -1, factor, params.x)

    monkeypatch.setattr(numeric, "limit_value", nudged)
    report = verify_identity(t1_half, 16, Fraction(1, 10**4))
    assert report.approximation.precision == 16
    # 2^-20 / pi, far below what 16 bits can show
    assert Fraction(2, 10**7) < report.abs_error < Fraction(4, 10**7)


def test_tolerance_below_resolution(t1_half):
    fine = Fraction(1, 10**30)
    with pytest.raises(PrecisionExhausted):
        verify_identity(t1_half, 16, fine)
    with pytest.raises(PrecisionExhausted):
        sum_direct(t1_half, 16, 10, tolerance=fine)
    with pytest.raises(PrecisionExhausted):
        sum_telescoped(t1_half, 16, 10, tolerance=fine)


def test_resolution_scales_with_target(t12_half_squared):
    with pytest.raises(PrecisionExhausted):
        richardson_limit(t12_half_squared, levels=4, precision=64, tolerance=Fraction(1, 10**19))
    report = richardson_limit(
        t12_half_squared, levels=4, precision=64, tolerance=Fraction(1, 10**18)
    )
    assert not report.passed


@given(st.lists(series_params(max_m=2), min_size=40, max_size=40))
@settings(max_examples=1, deadline=None)
def test_error_estimates_are_honest(suite):
    reports = [richardson_limit(params, levels=8, precision=128) for params in suite]
    honest = sum(report.error_estimate >= report.abs_error for report in reports)
    assert honest >= 0.95 * len(reports)
