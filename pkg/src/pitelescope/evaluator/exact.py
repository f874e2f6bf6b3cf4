"""Exact partial sums and their telescoped closed form."""

from __future__ import annotations

from fractions import Fraction

from pitelescope.errors import DomainError
from pitelescope.series.family import boundary, prefactor, ratio_factors, tau
from pitelescope.series.params import SeriesParams, require_valid


def partial_sum_exact(params: SeriesParams, n: int) -> Fraction:
    """sum_{k=0}^{n} summand(k), stepping the prefactor by its ratio."""
    if n < 0:
        raise DomainError(f"partial sum bound must be non-negative, got {n}")
    require_valid(params)
    rf = ratio_factors(params)
    current = prefactor(params, 0)
    total = Fraction(0)
    for k in range(n + 1):
        upper = Fraction(1)
        for a in rf.numerator:
            upper *= k + a
        lower = Fraction(1)
        shifted = Fraction(1)
        for b in rf.denominator:
            lower *= k + b - 1
            shifted *= k + b
        total += current * (upper - lower)
        current = current * upper / shifted
    return total


def telescoped_partial_sum(params: SeriesParams, n: int) -> Fraction:
    """tau(n) - tau(-1)."""
    return tau(params, n) - boundary(params)
