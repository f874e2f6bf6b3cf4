"""
The two telescoping families.

Both are written over one shape. With N(k) = prod (k + a) over the numerator
shifts and D(k) = prod (k + b) over the denominator shifts of
``ratio_factors``, the prefactor P satisfies P(k+1) = P(k) N(k) / D(k), and

    tau(k)     = P(k) N(k)
    tau(k-1)   = P(k) D(k-1)
    summand(k) = P(k) (N(k) - D(k-1)) = tau(k) - tau(k-1)

so the partial sums telescope to tau(N) - tau(-1).

T1, per index:  a = (x+p, 1-x+q),  b = (r+1, p+q-r+2)
T12, per index: a = (p+1, q+1),    b = (x+r+1, 1-x+p+q-r+2)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from pitelescope.arith.bigreal import BigReal, check_precision
from pitelescope.arith.constants import pi_reference, sin_pi_exact, sin_pi_numeric
from pitelescope.arith.poly import Poly, interpolate, linear_product, poly_sub, trim
from pitelescope.arith.rational import factorial, pochhammer
from pitelescope.arith.surd import SurdExpr
from pitelescope.errors import CancellationFailure, DomainError
from pitelescope.series.params import Factor, FamilyId, SeriesParams, require_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioFactors:
    """Shifts a, b with P(k+1)/P(k) = prod (k + a) / prod (k + b)."""

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]

    def common_denominator(self) -> int:
        return math.lcm(*(s.denominator for s in self.numerator + self.denominator))

    def scaled(self) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        """Shifts multiplied by their common denominator L, with L itself."""
        scale = self.common_denominator()
        return (
            tuple(int(s * scale) for s in self.numerator),
            tuple(int(s * scale) for s in self.denominator),
            scale,
        )


def _shifts(family: FamilyId, f: Factor) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    if family is FamilyId.T1:
        return (
            (f.x + f.p, 1 - f.x + f.q),
            (Fraction(f.r + 1), Fraction(f.p + f.q - f.r + 2)),
        )
    return (
        (Fraction(f.p + 1), Fraction(f.q + 1)),
        (f.x + f.r + 1, 1 - f.x + f.p + f.q - f.r + 2),
    )


def ratio_factors(params: SeriesParams) -> RatioFactors:
    numerator: list[Fraction] = []
    denominator: list[Fraction] = []
    for factor in params.factors():
        a, b = _shifts(params.family, factor)
        numerator.extend(a)
        denominator.extend(b)
    return RatioFactors(tuple(numerator), tuple(denominator))


def _prefactor_one(family: FamilyId, f: Factor, k: int) -> Fraction:
    if family is FamilyId.T1:
        return (
            pochhammer(f.x, k + f.p)
            * pochhammer(1 - f.x, k + f.q)
            / (factorial(k + f.r) * factorial(k + f.p + f.q - f.r + 1))
        )
    return (
        Fraction(factorial(k + f.p) * factorial(k + f.q))
        / pochhammer(f.x, k + f.r + 1)
        / pochhammer(1 - f.x, k + f.p + f.q - f.r + 2)
    )


def prefactor(params: SeriesParams, k: int) -> Fraction:
    """P(k), the product of shifted-factorial and factorial ratios."""
    require_valid(params)
    result = Fraction(1)
    for factor in params.factors():
        result *= _prefactor_one(params.family, factor, k)
    return result


def _numerator_product(rf: RatioFactors, k: int) -> Fraction:
    result = Fraction(1)
    for a in rf.numerator:
        result *= k + a
    return result


def _lower_product(rf: RatioFactors, k: int) -> Fraction:
    """D(k-1)."""
    result = Fraction(1)
    for b in rf.denominator:
        result *= k + b - 1
    return result


def bracket(params: SeriesParams, k: int) -> Fraction:
    """The brace difference N(k) - D(k-1) of the k-th term."""
    require_valid(params)
    rf = ratio_factors(params)
    return _numerator_product(rf, k) - _lower_product(rf, k)


def tau(params: SeriesParams, k: int) -> Fraction:
    if k < 0:
        raise DomainError(f"tau is defined here for k >= 0, got {k}")
    require_valid(params)
    return prefactor(params, k) * _numerator_product(ratio_factors(params), k)


def boundary(params: SeriesParams) -> Fraction:
    """tau(-1), from the closed forms in which the vanishing factor r is explicit."""
    require_valid(params)
    result = Fraction(1)
    for f in params.factors():
        if params.family is FamilyId.T1:
            upper = f.p + f.q - f.r + 1
            result *= (
                pochhammer(f.x, f.p)
                * pochhammer(1 - f.x, f.q)
                / (factorial(f.r) * factorial(upper))
                * f.r
                * upper
            )
        else:
            result *= Fraction(factorial(f.p) * factorial(f.q)) / (
                pochhammer(f.x, f.r) * pochhammer(1 - f.x, f.p + f.q - f.r + 1)
            )
    return result


def summand(params: SeriesParams, k: int) -> Fraction:
    if k < 0:
        raise DomainError(f"summand index must be non-negative, got {k}")
    return prefactor(params, k) * bracket(params, k)


def bracket_polynomial(params: SeriesParams) -> Poly:
    """The bracket expanded symbolically, trailing zero coefficients dropped."""
    require_valid(params)
    rf = ratio_factors(params)
    upper = linear_product(rf.numerator)
    lower = linear_product(b - 1 for b in rf.denominator)
    return trim(poly_sub(upper, lower))


def bracket_coefficients(params: SeriesParams) -> Poly:
    """
    Bracket coefficients of degree 0 .. 2m-2, recovered by exact
    interpolation at k = 0 .. 2m.

    Raises CancellationFailure if the degree 2m or 2m-1 coefficient survives.
    """
    require_valid(params)
    degree = 2 * params.m
    rf = ratio_factors(params)
    values = [_numerator_product(rf, k) - _lower_product(rf, k) for k in range(degree + 1)]
    coefficients = interpolate(values)
    if coefficients[degree] != 0 or coefficients[degree - 1] != 0:
        raise CancellationFailure(
            f"leading bracket coefficients {coefficients[degree]}, "
            f"{coefficients[degree - 1]} do not vanish for {params.describe()}"
        )
    return coefficients[: degree - 1]


@dataclass(frozen=True)
class LimitSpec:
    """lim tau(n) = surd_factor * pi**pi_exponent (or its numeric counterpart)."""

    family: FamilyId
    pi_exponent: int
    surd_factor: SurdExpr | None
    x: tuple[Fraction, ...]

    def numeric(self, precision: int) -> BigReal:
        check_precision(precision)
        working = precision + 16
        pi_power = pi_reference(working) ** self.pi_exponent
        if self.surd_factor is not None:
            return (self.surd_factor.evaluate(working) * pi_power).with_precision(precision)
        sines = BigReal.from_int(1, working)
        for x in self.x:
            sines = sines * sin_pi_numeric(x, working)
        value = sines * pi_power if self.family is FamilyId.T1 else pi_power / sines
        return value.with_precision(precision)


def limit_value(params: SeriesParams) -> LimitSpec:
    require_valid(params)
    exponent = params.family.pi_sign * params.m
    product: SurdExpr | None = SurdExpr.rational(1)
    for x in params.x:
        exact = sin_pi_exact(x)
        if exact is None:
            logger.debug("sin(pi*%s) has no closed form; limit is numeric only", x)
            product = None
            break
        assert product is not None
        product = product * exact
    if product is not None and params.family is FamilyId.T12:
        product = product.inverse()
    return LimitSpec(params.family, exponent, product, params.x)
