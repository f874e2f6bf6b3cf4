"""Exact rational helpers: shifted factorials, factorials and the rational string format."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from pitelescope.errors import DomainError, NegativeFactorial, ZeroDivisor

ExactRational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def pochhammer(x: RationalLike, n: int) -> Fraction:
    """
    Shifted factorial (x)_n.

    For n > 0 the rising product x(x+1)...(x+n-1), for n = 0 one, and for
    n < 0 the reciprocal form (-1)^|n| / prod_{k=1}^{|n|} (k - x), which keeps
    (x)_{n+1} = (x)_n (x+n) valid across all integers.
    """
    x = Fraction(x)
    if n == 0:
        return Fraction(1)
    if n > 0:
        result = Fraction(1)
        for k in range(n):
            result *= x + k
        return result

    denominator = Fraction(1)
    for k in range(1, -n + 1):
        factor = k - x
        if factor == 0:
            raise ZeroDivisor(f"({x})_{n}: factor {k} - x vanishes")
        denominator *= factor
    sign = -1 if n % 2 else 1
    return Fraction(sign) / denominator


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise NegativeFactorial(f"factorial of negative integer {n}")
    return math.factorial(n)


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" (or a bare integer) into a Fraction."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise DomainError(f"not a rational number: {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: RationalLike) -> str:
    """Canonical lowest-terms string: "-3/7", or "5" for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
