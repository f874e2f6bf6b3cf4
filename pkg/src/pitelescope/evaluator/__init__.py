"""Exact and floating summation, extrapolation and identity verification."""

from pitelescope.evaluator.exact import partial_sum_exact, telescoped_partial_sum
from pitelescope.evaluator.numeric import (
    bits_for_digits,
    check_resolution,
    extrapolate_series,
    extrapolate_tau,
    levels_for_digits,
    richardson_limit,
    richardson_table,
    sum_direct,
    sum_telescoped,
    tau_numeric_sequence,
    verify_identity,
)
from pitelescope.evaluator.report import EvalReport, Method

__all__ = [
    "EvalReport",
    "Method",
    "bits_for_digits",
    "check_resolution",
    "extrapolate_series",
    "extrapolate_tau",
    "levels_for_digits",
    "partial_sum_exact",
    "richardson_limit",
    "richardson_table",
    "sum_direct",
    "sum_telescoped",
    "tau_numeric_sequence",
    "telescoped_partial_sum",
    "verify_identity",
]
