"""Evaluation reports."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any

from pitelescope.arith.bigreal import BigReal
from pitelescope.series.params import SeriesParams


class Method(str, Enum):
    DIRECT = "direct"
    TELESCOPED = "telescoped"
    RICHARDSON = "richardson"


@dataclass(frozen=True)
class EvalReport:
    """
    Outcome of one numeric evaluation.

    ``work`` counts summed terms for direct summation and extrapolation
    nodes for Richardson. ``passed`` is abs_error <= tolerance.
    """

    params: SeriesParams
    method: Method
    work: int
    approximation: BigReal
    target: BigReal
    abs_error: BigReal
    error_estimate: BigReal
    tolerance: BigReal
    passed: bool
    wall_time: float
    label: str | None = None

    @classmethod
    def build(
        cls,
        params: SeriesParams,
        method: Method,
        work: int,
        approximation: BigReal,
        target: BigReal,
        error_estimate: BigReal,
        tolerance: BigReal | None,
        precision: int,
        wall_time: float,
        label: str | None = None,
    ) -> EvalReport:
        """
        Fill abs_error and passed from working-precision values, then round the
        reported numbers to ``precision``. A missing tolerance defaults to the
        error estimate.
        """
        abs_error = abs(approximation - target)
        error_estimate = error_estimate.with_precision(precision)
        if tolerance is None:
            tolerance = error_estimate
        return cls(
            params=params,
            method=method,
            work=work,
            approximation=approximation.with_precision(precision),
            target=target.with_precision(precision),
            abs_error=abs_error.with_precision(precision),
            error_estimate=error_estimate,
            tolerance=tolerance,
            passed=abs_error <= tolerance,
            wall_time=wall_time,
            label=label,
        )

    def with_label(self, label: str) -> EvalReport:
        return replace(self, label=label)

    def to_json(self, digits: int = 20) -> dict[str, Any]:
        return {
            "id": self.label if self.label is not None else self.params.describe(),
            "pass": self.passed,
            "approx": self.approximation.to_decimal_string(digits),
            "target": self.target.to_decimal_string(digits),
            "abs_error": self.abs_error.to_decimal_string(6),
            "method": self.method.value,
            "work": self.work,
            "millis": round(self.wall_time * 1000, 3),
        }
