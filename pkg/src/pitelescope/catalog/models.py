"""Data models for printed identities."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Sequence

from pitelescope.arith.bigreal import BigReal, check_precision
from pitelescope.arith.constants import pi_reference
from pitelescope.arith.poly import poly_eval
from pitelescope.arith.rational import RationalLike, format_rational, parse_rational, pochhammer
from pitelescope.arith.surd import SurdExpr, SurdLike
from pitelescope.series.params import FamilyId, SeriesParams


class EntryKind(str, Enum):
    EXAMPLE = "example"
    COROLLARY = "corollary"


def _term_order(term: tuple[SurdExpr, int]) -> tuple[bool, int]:
    exponent = term[1]
    return (exponent == 0, -exponent)


@dataclass(frozen=True)
class PrintedValue:
    """A finite sum of surd coefficients times powers of pi."""

    terms: tuple[tuple[SurdExpr, int], ...]

    @classmethod
    def normalize(cls, pairs: Iterable[tuple[SurdLike, int]]) -> PrintedValue:
        """Merge equal exponents, drop zero coefficients, order pi powers before the constant."""
        merged: dict[int, SurdExpr] = {}
        for coefficient, exponent in pairs:
            merged[exponent] = merged.get(exponent, SurdExpr()) + SurdExpr.coerce(coefficient)
        kept = [(c, e) for e, c in merged.items() if not c.is_zero()]
        return cls(tuple(sorted(kept, key=_term_order)))

    def as_dict(self) -> dict[int, SurdExpr]:
        return {exponent: coefficient for coefficient, exponent in self.terms}

    def scale(self, factor: SurdLike) -> PrintedValue:
        return PrintedValue.normalize((c * SurdExpr.coerce(factor), e) for c, e in self.terms)

    def __add__(self, other: PrintedValue) -> PrintedValue:
        return PrintedValue.normalize(self.terms + other.terms)

    def numeric(self, precision: int) -> BigReal:
        check_precision(precision)
        working = precision + 16
        pi = pi_reference(working)
        total = BigReal.zero(working)
        for coefficient, exponent in self.terms:
            total = total + coefficient.evaluate(working) * pi**exponent
        return total.with_precision(precision)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for coefficient, exponent in self.terms:
            text = f"({coefficient})"
            pieces.append(text if exponent == 0 else f"{text}·π^{exponent}")
        return " + ".join(pieces)

    def to_json(self) -> list[dict[str, Any]]:
        return [{"coeff": c.to_json(), "pi_exp": e} for c, e in self.terms]

    @classmethod
    def from_json(cls, data: Sequence[dict[str, Any]]) -> PrintedValue:
        return cls.normalize(
            (SurdExpr.from_json(item["coeff"]), int(item["pi_exp"])) for item in data
        )


@dataclass(frozen=True)
class PrintedTerm:
    """
    The printed summand shape

        scale * prod (top_j)_k / prod (bottom_j)_k * sum_j poly_j k^j
    """

    scale: Fraction
    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]
    poly: tuple[Fraction, ...]

    @classmethod
    def build(
        cls,
        scale: RationalLike,
        top: Iterable[RationalLike],
        bottom: Iterable[RationalLike],
        poly: Iterable[RationalLike],
    ) -> PrintedTerm:
        return cls(
            Fraction(scale),
            tuple(Fraction(v) for v in top),
            tuple(Fraction(v) for v in bottom),
            tuple(Fraction(v) for v in poly),
        )

    def value(self, k: int) -> Fraction:
        result = self.scale * poly_eval(self.poly, k)
        for shift in self.top:
            result *= pochhammer(shift, k)
        for shift in self.bottom:
            result /= pochhammer(shift, k)
        return result

    def to_json(self) -> dict[str, Any]:
        return {
            "scale": format_rational(self.scale),
            "top": [format_rational(v) for v in self.top],
            "bottom": [format_rational(v) for v in self.bottom],
            "poly": [format_rational(v) for v in self.poly],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> PrintedTerm:
        return cls.build(
            parse_rational(data["scale"]),
            (parse_rational(v) for v in data["top"]),
            (parse_rational(v) for v in data["bottom"]),
            (parse_rational(v) for v in data["poly"]),
        )


@dataclass(frozen=True)
class CatalogEntry:
    """
    One printed identity.

    The generic summand equals rho times the printed term, so the printed
    series sums to (generic limit - boundary) / rho, which is printed_lhs.
    """

    id: str
    family_params: SeriesParams
    rho: Fraction
    printed_lhs: PrintedValue
    printed_term: PrintedTerm
    provenance: str

    @property
    def family(self) -> FamilyId:
        return self.family_params.family

    @property
    def kind(self) -> EntryKind:
        section = self.id.split(".")[1]
        return EntryKind.COROLLARY if section.startswith("cor") else EntryKind.EXAMPLE
