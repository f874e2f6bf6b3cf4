"""
Floating evaluation of the series.

All recurrences run on integer ratios: with L the common denominator of the
shifts, tau(k+1) = tau(k) * prod(L(k+1) + La) / prod(Lk + Lb), so each step is
one integer multiply and one integer divide on a BigReal.
"""

from __future__ import annotations

import logging
import math
import time
from fractions import Fraction
from typing import Sequence, Union

from pitelescope.arith.bigreal import BigReal, check_precision
from pitelescope.errors import DomainError, PrecisionExhausted
from pitelescope.evaluator.report import EvalReport, Method
from pitelescope.series.family import boundary, limit_value, prefactor, ratio_factors, tau
from pitelescope.series.params import SeriesParams, require_valid

logger = logging.getLogger(__name__)

Tolerance = Union[BigReal, Fraction, float, int]

DEFAULT_BASE = 16
_LOG2_10 = math.log2(10)


def bits_for_digits(digits: int) -> int:
    """Working bits for ``digits`` decimal digits: ceil(D log2 10) + 32."""
    if digits < 1:
        raise DomainError(f"digits must be positive, got {digits}")
    return math.ceil(digits * _LOG2_10) + 32


def levels_for_digits(digits: int) -> int:
    if digits < 1:
        raise DomainError(f"digits must be positive, got {digits}")
    return min(14, max(4, math.ceil(0.6 * digits) + 4))


def digits_for_tolerance(tolerance: BigReal) -> int:
    if tolerance.sign() <= 0:
        raise DomainError("tolerance must be positive")
    return max(1, math.ceil(-tolerance.log10_magnitude() - 1e-9))


def richardson_precision(precision: int, base: int, levels: int) -> int:
    """precision + 32 guard bits + ceil(log2(levels * base * 2**levels))."""
    return precision + 32 + math.ceil(math.log2(levels * base * 2**levels))


def as_tolerance(tolerance: Tolerance, precision: int) -> BigReal:
    if isinstance(tolerance, BigReal):
        return tolerance
    return BigReal.from_fraction(Fraction(tolerance), precision)


def resolution(value: BigReal, precision: int) -> BigReal:
    """2^-precision * max(1, |value|): the smallest error ``precision`` bits can resolve."""
    floor = BigReal.epsilon(precision)
    magnitude = abs(value)
    return floor * magnitude if magnitude > 1 else floor


def check_resolution(tolerance: BigReal, target: BigReal, precision: int) -> None:
    floor = resolution(target, precision)
    if tolerance < floor:
        raise PrecisionExhausted(
            f"tolerance {tolerance.to_decimal_string(3)} is below the {precision}-bit "
            f"resolution {floor.to_decimal_string(3)}"
        )


def _floor_estimate(estimate: BigReal, value: BigReal, precision: int) -> BigReal:
    floor = resolution(value, precision)
    return estimate if estimate > floor else floor


def _bound(tolerance: Tolerance | None, target: BigReal, precision: int) -> BigReal | None:
    if tolerance is None:
        return None
    bound = as_tolerance(tolerance, precision)
    check_resolution(bound, target, precision)
    return bound


def tau_numeric_sequence(
    params: SeriesParams, nodes: Sequence[int], precision: int
) -> list[BigReal]:
    """tau(n) at each node, in one pass of the ratio recurrence up to max(nodes)."""
    require_valid(params)
    check_precision(precision)
    if not nodes:
        return []
    if any(n < 0 for n in nodes):
        raise DomainError("tau nodes must be non-negative")
    wanted = set(nodes)
    last = max(nodes)
    upper, lower, scale = ratio_factors(params).scaled()

    current = BigReal.from_fraction(tau(params, 0), precision)
    found: dict[int, BigReal] = {}
    for k in range(last + 1):
        if k in wanted:
            found[k] = current
        if k == last:
            break
        step_up = 1
        for a in upper:
            step_up *= scale * (k + 1) + a
        step_down = 1
        for b in lower:
            step_down *= scale * k + b
        current = current.mul_int(step_up).div_int(step_down)
    return [found[n] for n in nodes]


def richardson_table(values: Sequence[BigReal]) -> list[list[BigReal]]:
    """
    Extrapolation table for values at n, 2n, 4n, ... assuming an expansion in
    integer powers of 1/n. Row t holds t+1 entries; the diagonal is the
    sequence of best estimates.
    """
    table: list[list[BigReal]] = []
    for t, value in enumerate(values):
        row = [value]
        for j in range(1, t + 1):
            previous = table[t - 1][j - 1]
            row.append(row[j - 1] + (row[j - 1] - previous).div_int((1 << j) - 1))
        table.append(row)
    return table


def extrapolate_tau(
    params: SeriesParams, base: int, levels: int, precision: int
) -> tuple[BigReal, BigReal]:
    """
    lim tau(n) from nodes base * 2^t, t < levels, at the Richardson working
    precision, with the spread of the last two diagonal entries.
    """
    if levels < 2:
        raise DomainError(f"Richardson needs at least 2 levels, got {levels}")
    if base < 4:
        raise DomainError(f"Richardson base must be at least 4, got {base}")
    check_precision(precision)
    working = richardson_precision(precision, base, levels)
    nodes = [base << t for t in range(levels)]
    logger.debug(
        "richardson %s: nodes %d..%d, %d working bits",
        params.describe(), nodes[0], nodes[-1], working,
    )
    table = richardson_table(tau_numeric_sequence(params, nodes, working))
    best = table[-1][-1]
    return best, abs(best - table[-2][-2])


def extrapolate_series(
    params: SeriesParams, base: int, levels: int, precision: int
) -> tuple[BigReal, BigReal, BigReal]:
    """Extrapolated series value, its target and the spread, all at working precision."""
    require_valid(params)
    best, spread = extrapolate_tau(params, base, levels, precision)
    tail = BigReal.from_fraction(boundary(params), best.precision)
    target = limit_value(params).numeric(best.precision) - tail
    return best - tail, target, spread


def richardson_limit(
    params: SeriesParams,
    base: int = DEFAULT_BASE,
    levels: int = 10,
    precision: int = 256,
    tolerance: Tolerance | None = None,
) -> EvalReport:
    """Extrapolate tau(n) to its limit and subtract the boundary term."""
    started = time.perf_counter()
    approximation, target, spread = extrapolate_series(params, base, levels, precision)

    return EvalReport.build(
        params=params,
        method=Method.RICHARDSON,
        work=levels,
        approximation=approximation,
        target=target,
        error_estimate=_floor_estimate(spread, approximation, precision),
        tolerance=_bound(tolerance, target, precision),
        precision=precision,
        wall_time=time.perf_counter() - started,
    )


def sum_direct(
    params: SeriesParams,
    precision: int,
    max_terms: int,
    tolerance: Tolerance | None = None,
) -> EvalReport:
    """
    Sum summand(0 .. max_terms-1) in floating point.

    The tail of an O(1/k^2) term sequence is estimated as C / (N - 1), with C
    the largest k^2 |term_k| over the last tenth of the summed terms.
    """
    if max_terms < 1:
        raise DomainError(f"max_terms must be positive, got {max_terms}")
    require_valid(params)
    check_precision(precision)
    started = time.perf_counter()

    working = precision + 32 + math.ceil(math.log2(max_terms + 1))
    upper, lower, scale = ratio_factors(params).scaled()
    normalizer = scale ** len(upper)
    tail_start = max_terms - max(1, max_terms // 10)

    current = BigReal.from_fraction(prefactor(params, 0), working)
    total = BigReal.zero(working)
    tail_constant = BigReal.zero(working)
    for k in range(max_terms):
        up = 1
        for a in upper:
            up *= scale * k + a
        down = 1
        shifted = 1
        for b in lower:
            down *= scale * k + b - scale
            shifted *= scale * k + b
        term = current.mul_int(up - down).div_int(normalizer)
        total = total + term
        if k >= tail_start:
            weighted = abs(term).mul_int(max(k, 1) ** 2)
            if weighted > tail_constant:
                tail_constant = weighted
        current = current.mul_int(up).div_int(shifted)

    estimate = tail_constant.div_int(max(1, max_terms - 1))
    offset = BigReal.from_fraction(boundary(params), working)
    target = limit_value(params).numeric(working) - offset
    logger.debug("direct %s: %d terms, %d working bits", params.describe(), max_terms, working)

    return EvalReport.build(
        params=params,
        method=Method.DIRECT,
        work=max_terms,
        approximation=total,
        target=target,
        error_estimate=_floor_estimate(estimate, total, precision),
        tolerance=_bound(tolerance, target, precision),
        precision=precision,
        wall_time=time.perf_counter() - started,
    )


def sum_telescoped(
    params: SeriesParams,
    precision: int,
    max_terms: int,
    tolerance: Tolerance | None = None,
) -> EvalReport:
    """
    The partial sum of max_terms terms through its closed form tau(N-1) - tau(-1).

    The tail is estimated by |tau(N-1) - tau((N-1)//2)|, which matches it to
    leading order when tau(n) - limit = c/n + O(1/n^2).
    """
    if max_terms < 1:
        raise DomainError(f"max_terms must be positive, got {max_terms}")
    require_valid(params)
    check_precision(precision)
    started = time.perf_counter()

    working = precision + 32 + math.ceil(math.log2(max_terms + 1))
    last = max_terms - 1
    half, full = tau_numeric_sequence(params, [last // 2, last], working)
    offset = BigReal.from_fraction(boundary(params), working)
    approximation = full - offset
    target = limit_value(params).numeric(working) - offset

    return EvalReport.build(
        params=params,
        method=Method.TELESCOPED,
        work=max_terms,
        approximation=approximation,
        target=target,
        error_estimate=_floor_estimate(abs(full - half), approximation, precision),
        tolerance=_bound(tolerance, target, precision),
        precision=precision,
        wall_time=time.perf_counter() - started,
    )


def verify_identity(
    params: SeriesParams,
    precision: int,
    tolerance: Tolerance,
    base: int = DEFAULT_BASE,
    levels: int | None = None,
) -> EvalReport:
    """Series plus boundary against the limit, by Richardson extrapolation."""
    bound = as_tolerance(tolerance, precision)
    if levels is None:
        levels = levels_for_digits(digits_for_tolerance(bound))
    return richardson_limit(params, base=base, levels=levels, precision=precision, tolerance=bound)
