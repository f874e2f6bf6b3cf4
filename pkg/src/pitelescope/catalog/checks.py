"""Exact metadata checks and numeric verification of catalog entries."""

from __future__ import annotations

import logging
import time
from dataclasses import replace

from pitelescope.arith.surd import SurdExpr
from pitelescope.catalog.models import CatalogEntry, PrintedValue
from pitelescope.errors import TelescopeError
from pitelescope.evaluator.numeric import (
    DEFAULT_BASE,
    Tolerance,
    as_tolerance,
    check_resolution,
    digits_for_tolerance,
    extrapolate_series,
    levels_for_digits,
    resolution,
)
from pitelescope.evaluator.report import EvalReport, Method
from pitelescope.series.family import boundary, limit_value, summand
from pitelescope.series.params import validate

logger = logging.getLogger(__name__)

CHECKED_TERMS = 6


def expected_lhs(entry: CatalogEntry) -> PrintedValue | None:
    """rho * printed_lhs as the generic instance predicts it, or None without a surd limit."""
    params = entry.family_params
    limit = limit_value(params)
    if limit.surd_factor is None:
        return None
    return PrintedValue.normalize(
        [(limit.surd_factor, limit.pi_exponent), (SurdExpr.rational(-boundary(params)), 0)]
    )


def check_normalization(entry: CatalogEntry) -> bool:
    """
    Exact agreement of an entry with its generic instance:
    summand(k) = rho * printed_term(k) for k < 6, and
    rho * printed_lhs = limit - boundary.
    """
    params = entry.family_params
    violations = validate(params)
    if violations:
        logger.debug("%s: invalid parameters: %s", entry.id, "; ".join(violations))
        return False
    try:
        for k in range(CHECKED_TERMS):
            generic = summand(params, k)
            printed = entry.rho * entry.printed_term.value(k)
            if generic != printed:
                logger.debug(
                    "%s: term %d: generic %s, rho * printed %s", entry.id, k, generic, printed
                )
                return False
        expected = expected_lhs(entry)
    except (TelescopeError, ZeroDivisionError) as exc:
        logger.debug("%s: %s", entry.id, exc)
        return False
    if expected is None:
        logger.debug("%s: limit has no exact surd factor", entry.id)
        return False
    return entry.printed_lhs.scale(entry.rho) == expected


def verify_entry(
    entry: CatalogEntry,
    precision: int,
    tolerance: Tolerance,
    base: int = DEFAULT_BASE,
    levels: int | None = None,
) -> EvalReport:
    """
    Verify the generic identity, then compare the printed left side with the
    extrapolated series divided by rho. The report is in the printed scale.
    """
    started = time.perf_counter()
    params = entry.family_params
    bound = as_tolerance(tolerance, precision)
    if levels is None:
        levels = levels_for_digits(digits_for_tolerance(bound))
    series, generic_target, spread = extrapolate_series(params, base, levels, precision)
    check_resolution(bound, generic_target, precision)
    generic_error = abs(series - generic_target)
    floor = resolution(series, precision)

    approximation = series / entry.rho
    target = entry.printed_lhs.numeric(series.precision)
    check_resolution(bound, target, precision)
    printed = EvalReport.build(
        params=params,
        method=Method.RICHARDSON,
        work=levels,
        approximation=approximation,
        target=target,
        error_estimate=(spread if spread > floor else floor) / abs(entry.rho),
        tolerance=bound,
        precision=precision,
        wall_time=0.0,
        label=entry.id,
    )
    logger.debug(
        "%s: generic error %s, printed error %s",
        entry.id,
        generic_error.to_decimal_string(4),
        printed.abs_error.to_decimal_string(4),
    )
    return replace(
        printed,
        passed=generic_error <= bound and printed.passed,
        wall_time=time.perf_counter() - started,
    )
