"""Dense polynomials in k with exact rational coefficients (lowest degree first)."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from pitelescope.arith.rational import RationalLike

Poly = list[Fraction]


def trim(poly: Sequence[Fraction]) -> Poly:
    """Drop vanishing leading coefficients; the zero polynomial is []."""
    result = list(poly)
    while result and result[-1] == 0:
        result.pop()
    return result


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    size = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
        for i in range(size)
    ]


def poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    return poly_add(a, [-c for c in b])


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    if not a or not b:
        return []
    product = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            product[i + j] += ca * cb
    return product


def linear_product(shifts: Iterable[RationalLike]) -> Poly:
    """prod (k + a) over the given shifts."""
    result: Poly = [Fraction(1)]
    for shift in shifts:
        result = poly_mul(result, [Fraction(shift), Fraction(1)])
    return result


def poly_eval(poly: Sequence[Fraction], k: RationalLike) -> Fraction:
    total = Fraction(0)
    for coefficient in reversed(poly):
        total = total * k + coefficient
    return total


def interpolate(values: Sequence[RationalLike]) -> Poly:
    """
    Coefficients of the unique polynomial of degree < len(values) taking
    ``values[j]`` at k = j, via Newton forward differences.
    """
    n = len(values)
    coefficients = [Fraction(0)] * n
    differences = [Fraction(v) for v in values]
    falling: Poly = [Fraction(1)]  # k (k-1) ... (k-j+1)
    for j in range(n):
        weight = differences[0] / math.factorial(j)
        for degree, c in enumerate(falling):
            coefficients[degree] += weight * c
        differences = [b - a for a, b in zip(differences, differences[1:])]
        falling = poly_mul(falling, [Fraction(-j), Fraction(1)])
    return coefficients
