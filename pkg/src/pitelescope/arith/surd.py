"""Exact arithmetic in Q(sqrt2, sqrt3, sqrt5).

Elements are stored as rational coefficients over the square roots of the
eight squarefree divisors of 30. The basis is closed under multiplication:
sqrt(d) * sqrt(e) = g * sqrt(de / g^2) with g = gcd(d, e).
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterator, Mapping, Union

from pitelescope.arith.bigreal import BigReal, check_precision
from pitelescope.arith.rational import RationalLike, format_rational, parse_rational
from pitelescope.errors import DomainError

BASIS: tuple[int, ...] = (1, 2, 3, 5, 6, 10, 15, 30)
GENERATORS: tuple[int, ...] = (2, 3, 5)

SurdLike = Union["SurdExpr", Fraction, int]


class SurdExpr:
    """An immutable element of Q(sqrt2, sqrt3, sqrt5)."""

    __slots__ = ("_coefficients", "_hash")

    def __init__(self, coefficients: Mapping[int, RationalLike] | None = None):
        normalized: dict[int, Fraction] = {}
        for radicand, coefficient in (coefficients or {}).items():
            if radicand not in BASIS:
                raise DomainError(f"radicand {radicand} is outside the sqrt basis {BASIS}")
            value = Fraction(coefficient)
            if value:
                normalized[radicand] = value
        self._coefficients = MappingProxyType(dict(sorted(normalized.items())))
        self._hash: int | None = None

    @classmethod
    def rational(cls, value: RationalLike) -> SurdExpr:
        return cls({1: value})

    @classmethod
    def sqrt(cls, n: int) -> SurdExpr:
        """sqrt(n) for a positive integer whose squarefree part divides 30."""
        if n <= 0:
            raise DomainError(f"sqrt of non-positive integer {n}")
        coefficient, radicand, rest = 1, 1, n
        for p in GENERATORS:
            while rest % (p * p) == 0:
                rest //= p * p
                coefficient *= p
            if rest % p == 0:
                rest //= p
                radicand *= p
        root = math.isqrt(rest)
        if root * root != rest:
            raise DomainError(f"sqrt({n}) is not in Q(sqrt2, sqrt3, sqrt5)")
        return cls({radicand: coefficient * root})

    @classmethod
    def coerce(cls, value: SurdLike) -> SurdExpr:
        if isinstance(value, SurdExpr):
            return value
        return cls.rational(value)

    # --- inspection ---------------------------------------------------

    @property
    def coefficients(self) -> Mapping[int, Fraction]:
        return self._coefficients

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._coefficients.items())

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_rational(self) -> bool:
        return all(radicand == 1 for radicand in self._coefficients)

    def rational_part(self) -> Fraction:
        return self._coefficients.get(1, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SurdExpr.rational(other)
        if not isinstance(other, SurdExpr):
            return NotImplemented
        return dict(self._coefficients) == dict(other._coefficients)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coefficients.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SurdExpr({dict(self._coefficients)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for radicand, coefficient in self:
            text = format_rational(coefficient)
            parts.append(text if radicand == 1 else f"({text})*sqrt({radicand})")
        return " + ".join(parts)

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other: SurdLike) -> SurdExpr:
        other = SurdExpr.coerce(other)
        merged = dict(self._coefficients)
        for radicand, coefficient in other:
            merged[radicand] = merged.get(radicand, Fraction(0)) + coefficient
        return SurdExpr(merged)

    __radd__ = __add__

    def __neg__(self) -> SurdExpr:
        return SurdExpr({d: -c for d, c in self})

    def __sub__(self, other: SurdLike) -> SurdExpr:
        return self + (-SurdExpr.coerce(other))

    def __rsub__(self, other: SurdLike) -> SurdExpr:
        return SurdExpr.coerce(other) - self

    def scale(self, factor: RationalLike) -> SurdExpr:
        factor = Fraction(factor)
        return SurdExpr({d: c * factor for d, c in self})

    def __mul__(self, other: SurdLike) -> SurdExpr:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SurdExpr):
            return NotImplemented
        product: dict[int, Fraction] = {}
        for d, a in self:
            for e, b in other:
                g = math.gcd(d, e)
                radicand = (d // g) * (e // g)
                product[radicand] = product.get(radicand, Fraction(0)) + a * b * g
        return SurdExpr(product)

    __rmul__ = __mul__

    def conjugate(self, p: int) -> SurdExpr:
        """Image under the automorphism sqrt(p) -> -sqrt(p)."""
        if p not in GENERATORS:
            raise DomainError(f"no conjugation for sqrt({p})")
        return SurdExpr({d: (-c if d % p == 0 else c) for d, c in self})

    def inverse(self) -> SurdExpr:
        if self.is_zero():
            raise DomainError("zero has no inverse")
        numerator = SurdExpr.rational(1)
        norm = self
        for p in GENERATORS:
            conjugate = norm.conjugate(p)
            numerator = numerator * conjugate
            norm = norm * conjugate
        assert norm.is_rational(), "norm must be rational after all conjugations"
        return numerator.scale(1 / norm.rational_part())

    def __truediv__(self, other: SurdLike) -> SurdExpr:
        return self * SurdExpr.coerce(other).inverse()

    def __rtruediv__(self, other: SurdLike) -> SurdExpr:
        return SurdExpr.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> SurdExpr:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = SurdExpr.rational(1)
        exponent = abs(n)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # --- numeric ------------------------------------------------------

    def evaluate(self, precision: int) -> BigReal:
        working = precision + 16
        total = BigReal.zero(working)
        for radicand, coefficient in self:
            term = BigReal.from_fraction(coefficient, working)
            if radicand != 1:
                term = term * BigReal.from_int(radicand, working).sqrt()
            total = total + term
        return total.with_precision(precision)

    # --- serialization ------------------------------------------------

    def to_json(self) -> dict[str, str]:
        return {str(d): format_rational(c) for d, c in self}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> SurdExpr:
        return cls({int(d): parse_rational(c) for d, c in data.items()})

    def latex(self) -> str:
        """LaTeX for the expression, e.g. ``\\frac{3\\sqrt{2}}{4} - 1``."""
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for index, (radicand, coefficient) in enumerate(self):
            negative = coefficient < 0
            body = _latex_term(abs(coefficient), radicand)
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)


def _latex_term(coefficient: Fraction, radicand: int) -> str:
    root = "" if radicand == 1 else f"\\sqrt{{{radicand}}}"
    numerator = coefficient.numerator
    if root and numerator == 1:
        top = root
    else:
        top = f"{numerator}{root}"
    if coefficient.denominator == 1:
        return top
    return f"\\frac{{{top}}}{{{coefficient.denominator}}}"


def surd_mul(a: SurdLike, b: SurdLike) -> SurdExpr:
    return SurdExpr.coerce(a) * SurdExpr.coerce(b)


def surd_eval(s: SurdLike, precision: int) -> BigReal:
    check_precision(precision)
    return SurdExpr.coerce(s).evaluate(precision)
