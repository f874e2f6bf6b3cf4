"""Builders turning printed constants into catalog entries, one per identity shape."""

from __future__ import annotations

from fractions import Fraction

from pitelescope.arith.poly import linear_product, poly_sub, trim
from pitelescope.arith.rational import factorial, format_rational, pochhammer
from pitelescope.arith.surd import SurdExpr
from pitelescope.catalog.models import CatalogEntry, PrintedTerm, PrintedValue
from pitelescope.series.params import FamilyId, SeriesParams

PQR_INSTANTIATIONS: tuple[tuple[int, int, int], ...] = ((0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 1, 0))
POWERS: tuple[int, ...] = (1, 2, 3)


def pqr_suffix(p: int, q: int, r: int) -> str:
    return f"p{p}q{q}r{r}"


def x_suffix(x: Fraction) -> str:
    return "x" + format_rational(x).replace("/", "-")


def sine_quotient(
    ident: str,
    x: Fraction,
    numerator: SurdExpr,
    first: Fraction,
    second: Fraction,
    bnum: Fraction,
    pqr: tuple[int, int, int],
    provenance: str,
) -> CatalogEntry:
    """
    T1 with one index: the printed series sums to
    numerator / (first * second * pi) minus the printed boundary constant.
    """
    p, q, r = pqr
    upper = p + q - r + 1
    denominator = first * second
    scale = pochhammer(x, p) * pochhammer(1 - x, q) / (factorial(r) * factorial(upper))
    printed_boundary = bnum * scale * r * upper / denominator
    return CatalogEntry(
        id=ident,
        family_params=SeriesParams.build(FamilyId.T1, [x], [p], [q], [r]),
        rho=denominator / bnum,
        printed_lhs=PrintedValue.normalize(
            [(numerator.scale(1 / denominator), -1), (-printed_boundary, 0)]
        ),
        printed_term=PrintedTerm.build(scale, [x + p, 1 - x + q], [r + 1, upper + 1], [1]),
        provenance=provenance,
    )


def cosecant_quotient(
    ident: str,
    x: Fraction,
    numerator: SurdExpr,
    first: Fraction,
    second: Fraction,
    bnum: Fraction,
    pqr: tuple[int, int, int],
    provenance: str,
) -> CatalogEntry:
    """T12 with one index: numerator * pi / (first * second) minus the printed boundary."""
    p, q, r = pqr
    upper = p + q - r + 1
    denominator = first * second
    factorials = Fraction(factorial(p) * factorial(q))
    scale = factorials / (pochhammer(x, r + 1) * pochhammer(1 - x, upper + 1))
    lower = pochhammer(x, r) * pochhammer(1 - x, upper)
    printed_boundary = bnum * factorials / lower / denominator
    return CatalogEntry(
        id=ident,
        family_params=SeriesParams.build(FamilyId.T12, [x], [p], [q], [r]),
        rho=denominator / bnum,
        printed_lhs=PrintedValue.normalize(
            [(numerator.scale(1 / denominator), 1), (-printed_boundary, 0)]
        ),
        printed_term=PrintedTerm.build(
            scale, [p + 1, q + 1], [x + r + 1, 1 - x + upper + 1], [1]
        ),
        provenance=provenance,
    )


def two_sines(
    ident: str,
    x: Fraction,
    y: Fraction,
    coefficient: SurdExpr,
    c0: Fraction,
    rho: Fraction,
    provenance: str,
) -> CatalogEntry:
    """
    T1, m = 2:
    sum (x)_k(1-x)_k(y)_k(1-y)_k/((1)_k^2 (2)_k^2) (k^2 + k + c0) = coefficient / pi^2.
    """
    return CatalogEntry(
        id=ident,
        family_params=SeriesParams.build(FamilyId.T1, [x, y]),
        rho=rho,
        printed_lhs=PrintedValue.normalize([(coefficient, -2)]),
        printed_term=PrintedTerm.build(1, [x, 1 - x, y, 1 - y], [1, 1, 2, 2], [c0, 1, 1]),
        provenance=provenance,
    )


def two_cosecants(
    ident: str,
    x: Fraction,
    y: Fraction,
    leading: SurdExpr,
    constant: Fraction,
    c0: Fraction,
    rho: Fraction,
    provenance: str,
) -> CatalogEntry:
    """
    T12, m = 2:
    sum (1)_k^4/((1+x)_k(3-x)_k(1+y)_k(3-y)_k) (k^2 + 2k + c0) = leading pi^2 - constant.
    """
    return CatalogEntry(
        id=ident,
        family_params=SeriesParams.build(FamilyId.T12, [x, y]),
        rho=rho,
        printed_lhs=PrintedValue.normalize([(leading, 2), (-constant, 0)]),
        printed_term=PrintedTerm.build(
            1, [1, 1, 1, 1], [1 + x, 3 - x, 1 + y, 3 - y], [c0, 2, 1]
        ),
        provenance=provenance,
    )


def sine_power(ident: str, x: Fraction, base: SurdExpr, m: int, provenance: str) -> CatalogEntry:
    """T1 with m equal indices and zero shifts: the series sums to (base / pi)^m."""
    bracket = trim(
        poly_sub(linear_product([x] * m + [1 - x] * m), linear_product([0] * m + [1] * m))
    )
    return CatalogEntry(
        id=ident,
        family_params=SeriesParams.build(FamilyId.T1, [x] * m),
        rho=Fraction(1),
        printed_lhs=PrintedValue.normalize([(base**m, -m)]),
        printed_term=PrintedTerm.build(1, [x] * m + [1 - x] * m, [1] * m + [2] * m, bracket),
        provenance=provenance,
    )


def cosecant_power(
    ident: str,
    x: Fraction,
    leading: SurdExpr,
    constant: Fraction,
    m: int,
    provenance: str,
) -> CatalogEntry:
    """T12 with m equal indices and zero shifts: (leading pi)^m - constant^m."""
    bracket = trim(
        poly_sub(linear_product([1] * (2 * m)), linear_product([x] * m + [2 - x] * m))
    )
    return CatalogEntry(
        id=ident,
        family_params=SeriesParams.build(FamilyId.T12, [x] * m),
        rho=1 / (x * (1 - x) * (2 - x)) ** m,
        printed_lhs=PrintedValue.normalize([(leading**m, m), (-(constant**m), 0)]),
        printed_term=PrintedTerm.build(1, [1] * (2 * m), [1 + x] * m + [3 - x] * m, bracket),
        provenance=provenance,
    )
