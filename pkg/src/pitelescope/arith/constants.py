"""Reference constants: pi by Machin's formula and sin(pi x), exact and numeric.

These routines never use any of the telescoping series; they are the
independent oracle the series are checked against.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from pitelescope.arith.bigreal import BigReal, check_precision
from pitelescope.arith.rational import RationalLike
from pitelescope.arith.surd import SurdExpr
from pitelescope.errors import DomainError, PrecisionExhausted

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

# sin(pi x) for x in (0, 1/2]; the other half follows from sin(pi(1-x)) = sin(pi x).
_SIN_PI_TABLE: dict[Fraction, SurdExpr] = {
    Fraction(1, 2): SurdExpr.rational(1),
    Fraction(1, 3): SurdExpr.sqrt(3).scale(_HALF),
    Fraction(1, 4): SurdExpr.sqrt(2).scale(_HALF),
    Fraction(1, 6): SurdExpr.rational(_HALF),
    Fraction(1, 10): (SurdExpr.sqrt(5) - 1).scale(_QUARTER),
    Fraction(3, 10): (SurdExpr.sqrt(5) + 1).scale(_QUARTER),
    Fraction(1, 12): (SurdExpr.sqrt(6) - SurdExpr.sqrt(2)).scale(_QUARTER),
    Fraction(5, 12): (SurdExpr.sqrt(6) + SurdExpr.sqrt(2)).scale(_QUARTER),
}


def _check_unit_interval(x: Fraction) -> None:
    if not 0 < x < 1:
        raise DomainError(f"x = {x} is outside the open interval (0, 1)")


def _arctan_inverse_fixed(n: int, one: int) -> tuple[int, int]:
    """one * arctan(1/n) by its Taylor series, with the number of truncating divisions."""
    power = one // n
    total = power
    n_squared = n * n
    k = 1
    sign = 1
    divisions = 1
    while power:
        power //= n_squared
        k += 2
        sign = -sign
        total += sign * (power // k)
        divisions += 2
    return total, divisions


@lru_cache(maxsize=64)
def pi_fixed(bits: int) -> int:
    """
    floor-ish pi * 2**bits, within one unit.

    Machin: pi/4 = 4 arctan(1/5) - arctan(1/239). Each truncating division
    costs at most one unit at the guarded scale; the accumulated bound is
    checked against 2**-(bits+8) before the guard bits are dropped.
    """
    guard = 16 + bits.bit_length()
    one = 1 << (bits + guard)
    a, divisions_a = _arctan_inverse_fixed(5, one)
    b, divisions_b = _arctan_inverse_fixed(239, one)
    pi = 16 * a - 4 * b
    error_units = 16 * (divisions_a + 1) + 4 * (divisions_b + 1)
    if error_units > 1 << (guard - 8):
        raise PrecisionExhausted(f"Machin truncation bound exceeds guard budget at {bits} bits")
    return pi >> guard


def pi_reference(precision: int) -> BigReal:
    """pi to ``precision`` bits via Machin's arctangent formula."""
    check_precision(precision)
    working = precision + 8
    return BigReal.from_fixed(pi_fixed(working), working, precision)


def _sin_fixed(t: int, bits: int) -> int:
    t_squared = (t * t) >> bits
    term = t
    total = t
    sign = 1
    i = 1
    while term:
        term = ((term * t_squared) >> bits) // ((2 * i) * (2 * i + 1))
        sign = -sign
        total += sign * term
        i += 1
    return total


def _cos_fixed(t: int, bits: int) -> int:
    t_squared = (t * t) >> bits
    term = 1 << bits
    total = term
    sign = 1
    i = 1
    while term:
        term = ((term * t_squared) >> bits) // ((2 * i - 1) * (2 * i))
        sign = -sign
        total += sign * term
        i += 1
    return total


def sin_pi_exact(x: RationalLike) -> SurdExpr | None:
    """Exact sin(pi x) when it lies in Q(sqrt2, sqrt3, sqrt5) and is tabulated, else None."""
    x = Fraction(x)
    _check_unit_interval(x)
    return _SIN_PI_TABLE.get(min(x, 1 - x))


def sin_pi_numeric(x: RationalLike, precision: int) -> BigReal:
    """sin(pi x) by Taylor series after reduction to an argument in [0, pi/4]."""
    x = Fraction(x)
    _check_unit_interval(x)
    check_precision(precision)
    bits = precision + 24
    pi = pi_fixed(bits)
    y = min(x, 1 - x)
    if y <= _QUARTER:
        t = pi * y.numerator // y.denominator
        value = _sin_fixed(t, bits)
    else:
        z = _HALF - y
        t = pi * z.numerator // z.denominator
        value = _cos_fixed(t, bits)
    return BigReal.from_fixed(value, bits, precision)


def supported_sin_arguments() -> list[Fraction]:
    """Every x in (0, 1) for which sin_pi_exact has a closed form."""
    halves = sorted(_SIN_PI_TABLE)
    return sorted(set(halves) | {1 - y for y in halves})
