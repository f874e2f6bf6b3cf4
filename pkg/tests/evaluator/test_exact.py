from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from pitelescope.errors import DomainError
from pitelescope.evaluator.exact import partial_sum_exact, telescoped_partial_sum
from pitelescope.series.family import summand
from tests.strategies import series_params


def test_partial_sums(t1_half, t12_half):
    assert partial_sum_exact(t1_half, 0) == Fraction(1, 4)
    assert partial_sum_exact(t1_half, 1) == Fraction(9, 32)
    assert partial_sum_exact(t12_half, 0) == Fraction(8, 3) - 2
    with pytest.raises(DomainError):
        partial_sum_exact(t1_half, -1)


def test_incremental_ratio_matches_summands(t1_half_squared):
    expected = sum(summand(t1_half_squared, k) for k in range(12))
    assert partial_sum_exact(t1_half_squared, 11) == expected


@given(series_params())
@settings(max_examples=200, deadline=None)
def test_partial_sums_telescope(params):
    for n in (0, 1, 5, 37):
        assert partial_sum_exact(params, n) == telescoped_partial_sum(params, n)


def test_float_partial_sum_agrees(t1_half):
    total = 0.0
    for k in range(20):
        total += float(summand(t1_half, k))
    assert total == pytest.approx(float(partial_sum_exact(t1_half, 19)), rel=1e-12)
