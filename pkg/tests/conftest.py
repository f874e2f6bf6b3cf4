from __future__ import annotations

from fractions import Fraction

import pytest

from pitelescope.series.params import FamilyId, SeriesParams

HALF = Fraction(1, 2)


@pytest.fixture
def t1_half() -> SeriesParams:
    """Sums to 1/pi."""
    return SeriesParams.build(FamilyId.T1, [HALF])


@pytest.fixture
def t1_half_squared() -> SeriesParams:
    """Sums to 1/pi^2; twice the printed series of t1.ex9."""
    return SeriesParams.build(FamilyId.T1, [HALF, HALF])


@pytest.fixture
def t12_half() -> SeriesParams:
    """Sums to pi - 2."""
    return SeriesParams.build(FamilyId.T12, [HALF])


@pytest.fixture
def t12_half_squared() -> SeriesParams:
    """Sums to pi^2 - 4."""
    return SeriesParams.build(FamilyId.T12, [HALF, HALF])
