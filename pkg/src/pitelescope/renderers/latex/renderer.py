"""LaTeX renderer: each entry as an equation in its printed shape."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from jinja2 import Environment, PackageLoader

from pitelescope.arith.surd import SurdExpr
from pitelescope.renderers.base import BaseRenderer

if TYPE_CHECKING:
    from pitelescope.catalog.models import CatalogEntry, PrintedTerm, PrintedValue


def latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def latex_pi(exponent: int) -> str:
    power = abs(exponent)
    if power == 1:
        return "\\pi"
    if power < 10:
        return f"\\pi^{power}"
    return f"\\pi^{{{power}}}"


def _integral_form(coefficient: SurdExpr) -> tuple[bool, SurdExpr, int]:
    """coefficient = (-1 if negative) * numerator / denominator, numerator integral."""
    denominator = math.lcm(*(c.denominator for _, c in coefficient))
    numerator = coefficient.scale(denominator)
    negative = all(c < 0 for _, c in numerator)
    if negative:
        numerator = -numerator
    return negative, numerator, denominator


def latex_pi_term(coefficient: SurdExpr, exponent: int) -> tuple[bool, str]:
    """Sign and body of coefficient * pi**exponent, e.g. (False, r"\\frac{2}{\\pi^2}")."""
    negative, numerator, denominator = _integral_form(coefficient)
    top = numerator.latex()
    if exponent < 0:
        bottom = ("" if denominator == 1 else str(denominator)) + latex_pi(exponent)
        return negative, f"\\frac{{{top}}}{{{bottom}}}"
    if exponent > 0:
        if numerator == 1:
            top = latex_pi(exponent)
        elif len(numerator.coefficients) == 1:
            top = top + latex_pi(exponent)
        else:
            top = f"\\left({top}\\right){latex_pi(exponent)}"
    if denominator == 1:
        return negative, top
    return negative, f"\\frac{{{top}}}{{{denominator}}}"


def _join(pieces: Sequence[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    text = ""
    for index, (negative, body) in enumerate(pieces):
        if index == 0:
            text = f"-{body}" if negative else body
        else:
            text += f" - {body}" if negative else f" + {body}"
    return text


def latex_printed_value(value: PrintedValue) -> str:
    return _join([latex_pi_term(c, e) for c, e in value.terms])


def latex_polynomial(poly: Sequence[Fraction]) -> str:
    pieces: list[tuple[bool, str]] = []
    for degree in range(len(poly) - 1, -1, -1):
        coefficient = poly[degree]
        if coefficient == 0:
            continue
        monomial = "" if degree == 0 else "k" if degree == 1 else f"k^{degree}"
        magnitude = abs(coefficient)
        if monomial and magnitude == 1:
            body = monomial
        else:
            body = latex_rational(magnitude) + monomial
        pieces.append((coefficient < 0, body))
    return _join(pieces)


def _pochhammers(shifts: Sequence[Fraction]) -> str:
    counts = Counter(shifts)
    parts = []
    for shift in dict.fromkeys(shifts):
        symbol = f"\\left({latex_rational(shift)}\\right)_k"
        power = counts[shift]
        parts.append(symbol if power == 1 else f"{symbol}^{{{power}}}")
    return " ".join(parts) if parts else "1"


def latex_printed_term(term: PrintedTerm) -> str:
    pieces = []
    if term.scale != 1:
        pieces.append(latex_rational(term.scale))
    pieces.append(f"\\frac{{{_pochhammers(term.top)}}}{{{_pochhammers(term.bottom)}}}")
    if tuple(term.poly) != (1,):
        pieces.append(f"\\left({latex_polynomial(term.poly)}\\right)")
    return " ".join(pieces)


class LatexRenderer(BaseRenderer):
    """Render catalog entries as LaTeX equations."""

    def __init__(self) -> None:
        self.env = Environment(
            loader=PackageLoader("pitelescope", "renderers/latex/templates"),
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def get_extension(self) -> str:
        return ".tex"

    def render_string(self, entries: Sequence[CatalogEntry], standalone: bool = False) -> str:
        template = self.env.get_template("identity.tex.j2")
        items = [
            {
                "id": entry.id,
                "provenance": entry.provenance,
                "term": latex_printed_term(entry.printed_term),
                "value": latex_printed_value(entry.printed_lhs),
            }
            for entry in entries
        ]
        return template.render(items=items, standalone=standalone)
