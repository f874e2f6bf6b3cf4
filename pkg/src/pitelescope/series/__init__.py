"""The two parameterized telescoping series families."""

from pitelescope.series.family import (
    LimitSpec,
    RatioFactors,
    boundary,
    bracket,
    bracket_coefficients,
    bracket_polynomial,
    limit_value,
    prefactor,
    ratio_factors,
    summand,
    tau,
)
from pitelescope.series.params import FamilyId, SeriesParams, require_valid, validate

__all__ = [
    "FamilyId",
    "LimitSpec",
    "RatioFactors",
    "SeriesParams",
    "boundary",
    "bracket",
    "bracket_coefficients",
    "bracket_polynomial",
    "limit_value",
    "prefactor",
    "ratio_factors",
    "require_valid",
    "summand",
    "tau",
    "validate",
]
