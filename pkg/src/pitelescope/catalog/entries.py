"""The catalog of printed identities."""

from __future__ import annotations

from fractions import Fraction as F
from functools import lru_cache
from typing import Iterable

from pitelescope.arith.surd import SurdExpr
from pitelescope.catalog.models import CatalogEntry, EntryKind
from pitelescope.catalog.templates import (
    POWERS,
    PQR_INSTANTIATIONS,
    cosecant_power,
    cosecant_quotient,
    pqr_suffix,
    sine_power,
    sine_quotient,
    two_cosecants,
    two_sines,
    x_suffix,
)
from pitelescope.errors import CatalogLookupError
from pitelescope.series.params import FamilyId

ONE = SurdExpr.rational(1)
R2 = SurdExpr.sqrt(2)
R3 = SurdExpr.sqrt(3)
R5 = SurdExpr.sqrt(5)
R6 = SurdExpr.sqrt(6)

# number -> (x, numerator, (a1, b1), (a2, b2), bnum); the printed denominators
# are (a1 (p-r) + b1)(a2 (q-r) + b2).
SINE_QUOTIENTS: dict[int, tuple[F, SurdExpr, tuple[int, int], tuple[int, int], int]] = {
    1: (F(1, 2), ONE * 4, (2, 1), (2, 1), 4),
    2: (F(1, 6), ONE * 18, (6, 1), (6, 5), 36),
    3: (F(1, 4), R2 * 8, (4, 1), (4, 3), 16),
    4: (F(1, 3), R3 * F(9, 2), (3, 1), (3, 2), 9),
    5: (F(1, 10), (R5 - 1) * 25, (10, 1), (10, 9), 100),
    6: (F(3, 10), (R5 + 1) * 25, (10, 3), (10, 7), 100),
    7: (F(1, 12), (R6 - R2) * 36, (12, 1), (12, 11), 144),
    8: (F(5, 12), (R6 + R2) * 36, (12, 5), (12, 7), 144),
}

# Numerators rationalized, e.g. 400/(sqrt5 - 1) = 100(sqrt5 + 1).
COSECANT_QUOTIENTS: dict[int, tuple[F, SurdExpr, tuple[int, int], tuple[int, int], int]] = {
    21: (F(1, 2), ONE * 4, (2, 1), (2, 1), 4),
    22: (F(1, 6), ONE * 72, (6, 5), (6, 5), 36),
    23: (F(1, 4), R2 * 16, (4, 3), (4, 3), 16),
    24: (F(1, 3), R3 * 6, (3, 2), (3, 2), 9),
    25: (F(1, 10), (R5 + 1) * 100, (10, 9), (10, 9), 100),
    26: (F(3, 10), (R5 - 1) * 100, (10, 7), (10, 7), 100),
    27: (F(1, 12), (R6 + R2) * 144, (12, 11), (12, 11), 144),
    28: (F(5, 12), (R6 - R2) * 144, (12, 7), (12, 7), 144),
}

# number -> (x, y, coefficient of 1/pi^2, c0, rho)
TWO_SINES: dict[int, tuple[F, F, SurdExpr, F, F]] = {
    9: (F(1, 2), F(1, 2), ONE * 2, F(1, 8), F(1, 2)),
    10: (F(1, 3), F(1, 3), ONE * F(27, 16), F(1, 9), F(4, 9)),
    11: (F(1, 4), F(1, 4), ONE * F(4, 3), F(3, 32), F(3, 8)),
    12: (F(1, 6), F(1, 6), ONE * F(9, 10), F(5, 72), F(5, 18)),
    13: (F(1, 2), F(1, 6), ONE * F(9, 7), F(5, 56), F(7, 18)),
    14: (F(1, 10), F(3, 10), ONE * F(5, 6), F(63, 1000), F(3, 10)),
    15: (F(1, 12), F(5, 12), ONE * F(18, 23), F(385, 6624), F(23, 72)),
    16: (F(1, 2), F(1, 4), R2 * F(8, 7), F(3, 28), F(7, 16)),
    17: (F(1, 4), F(1, 6), R2 * F(36, 47), F(15, 188), F(47, 144)),
    18: (F(1, 2), F(1, 3), R3 * F(18, 17), F(2, 17), F(17, 36)),
    19: (F(1, 3), F(1, 6), R3 * F(9, 13), F(10, 117), F(13, 36)),
    20: (F(1, 3), F(1, 4), R6 * F(36, 59), F(6, 59), F(59, 144)),
}

# number -> (x, y, coefficient of pi^2, constant, c0, rho)
TWO_COSECANTS: dict[int, tuple[F, F, SurdExpr, F, F, F]] = {
    29: (F(1, 2), F(1, 2), ONE * F(9, 32), F(9, 8), F(7, 8), F(32, 9)),
    30: (F(1, 3), F(1, 3), ONE * F(50, 243), F(25, 72), F(7, 9), F(162, 25)),
    31: (F(1, 4), F(1, 4), ONE * F(49, 256), F(49, 288), F(23, 32), F(512, 49)),
    32: (F(1, 6), F(1, 6), ONE * F(121, 648), F(121, 1800), F(47, 72), F(2592, 121)),
    33: (F(1, 2), F(1, 6), ONE * F(55, 272), F(33, 136), F(111, 136), F(544, 55)),
    34: (
        F(1, 10), F(3, 10), ONE * F(61047, 325000), F(969, 13000), F(9031, 13000),
        F(1300000, 61047),
    ),
    35: (
        F(1, 12), F(5, 12), ONE * F(33649, 176256), F(437, 4896), F(18551, 24480),
        F(705024, 33649),
    ),
    36: (F(1, 2), F(1, 4), R2 * F(63, 416), F(21, 52), F(43, 52), F(416, 63)),
    37: (F(1, 4), F(1, 6), R2 * F(385, 2896), F(77, 724), F(499, 724), F(17376, 1155)),
    38: (F(1, 2), F(1, 3), R3 * F(2, 15), F(3, 5), F(21, 25), F(5)),
    39: (F(1, 3), F(1, 6), R3 * F(1100, 9963), F(55, 369), F(269, 369), F(3321, 275)),
    40: (F(1, 3), F(1, 4), R6 * F(7, 87), F(7, 29), F(109, 145), F(58, 7)),
}

# number -> (x, base): the series sums to (base / pi)^m
SINE_POWERS: dict[int, tuple[F, SurdExpr]] = {
    4: (F(1, 2), ONE),
    5: (F(1, 6), ONE * F(1, 2)),
    6: (F(1, 4), R2 * F(1, 2)),
    7: (F(1, 3), R3 * F(1, 2)),
    8: (F(1, 10), (R5 - 1) * F(1, 4)),
    9: (F(3, 10), (R5 + 1) * F(1, 4)),
    10: (F(1, 12), (R6 - R2) * F(1, 4)),
    11: (F(5, 12), (R6 + R2) * F(1, 4)),
}

# number -> (x, A, B): the series sums to (A pi)^m - B^m
COSECANT_POWERS: dict[int, tuple[F, SurdExpr, F]] = {
    15: (F(1, 2), ONE * F(3, 8), F(3, 4)),
    16: (F(1, 6), ONE * F(55, 108), F(11, 36)),
    17: (F(1, 4), R2 * F(21, 64), F(7, 16)),
    18: (F(1, 3), R3 * F(20, 81), F(5, 9)),
    19: (F(1, 10), (R5 + 1) * F(171, 1000), F(19, 100)),
    20: (F(3, 10), (R5 - 1) * F(357, 1000), F(51, 100)),
    21: (F(1, 12), (R6 + R2) * F(253, 1728), F(23, 144)),
    22: (F(5, 12), (R6 - R2) * F(665, 1728), F(95, 144)),
}

COSECANT_POWER_NOTES = {22: "printed 675 corrected to 665"}

# Spot instances of the three-parameter families: (x, sin or 1/sin at x, (p, q, r)).
SINE_SPOTS: tuple[tuple[F, SurdExpr, tuple[int, int, int]], ...] = (
    (F(2, 3), R3 * F(1, 2), (1, 2, 1)),
    (F(3, 4), R2 * F(1, 2), (0, 1, 1)),
)
COSECANT_SPOTS: tuple[tuple[F, SurdExpr, tuple[int, int, int]], ...] = (
    (F(5, 6), ONE * 2, (2, 1, 3)),
    (F(7, 12), R6 - R2, (0, 0, 2)),
)


def _sine_quotients() -> Iterable[CatalogEntry]:
    for number, (x, numerator, (a1, b1), (a2, b2), bnum) in SINE_QUOTIENTS.items():
        for p, q, r in PQR_INSTANTIATIONS:
            yield sine_quotient(
                f"t1.ex{number}.{pqr_suffix(p, q, r)}",
                x,
                numerator,
                F(a1 * (p - r) + b1),
                F(a2 * (q - r) + b2),
                F(bnum),
                (p, q, r),
                f"Example {number}, p={p} q={q} r={r}",
            )
    for x, numerator, (p, q, r) in SINE_SPOTS:
        yield sine_quotient(
            f"t1.cor2.{x_suffix(x)}.{pqr_suffix(p, q, r)}",
            x,
            numerator,
            p - r + x,
            1 + q - r - x,
            F(1),
            (p, q, r),
            f"Corollary 2, x={x} p={p} q={q} r={r}",
        )


def _cosecant_quotients() -> Iterable[CatalogEntry]:
    for number, (x, numerator, (a1, b1), (a2, b2), bnum) in COSECANT_QUOTIENTS.items():
        for p, q, r in PQR_INSTANTIATIONS:
            yield cosecant_quotient(
                f"t12.ex{number}.{pqr_suffix(p, q, r)}",
                x,
                numerator,
                F(a1 * (p - r) + b1),
                F(a2 * (q - r) + b2),
                F(bnum),
                (p, q, r),
                f"Example {number}, p={p} q={q} r={r}",
            )
    for x, numerator, (p, q, r) in COSECANT_SPOTS:
        yield cosecant_quotient(
            f"t12.cor13.{x_suffix(x)}.{pqr_suffix(p, q, r)}",
            x,
            numerator,
            1 + p - r - x,
            1 + q - r - x,
            F(1),
            (p, q, r),
            f"Corollary 13, x={x} p={p} q={q} r={r}",
        )


def _two_parameter() -> Iterable[CatalogEntry]:
    for number, (x, y, coefficient, c0, rho) in TWO_SINES.items():
        provenance = f"Example {number}, x={x} y={y}"
        yield two_sines(f"t1.ex{number}", x, y, coefficient, c0, rho, provenance)
    for number, (x, y, leading, constant, c0, rho) in TWO_COSECANTS.items():
        yield two_cosecants(
            f"t12.ex{number}", x, y, leading, constant, c0, rho, f"Example {number}, x={x} y={y}"
        )


def _powers() -> Iterable[CatalogEntry]:
    for number, (x, base) in SINE_POWERS.items():
        for m in POWERS:
            yield sine_power(f"t1.cor{number}.m{m}", x, base, m, f"Corollary {number}, m={m}")
    for number, (x, leading, constant) in COSECANT_POWERS.items():
        note = COSECANT_POWER_NOTES.get(number)
        for m in POWERS:
            provenance = f"Corollary {number}, m={m}"
            if note:
                provenance += f" ({note})"
            yield cosecant_power(f"t12.cor{number}.m{m}", x, leading, constant, m, provenance)


@lru_cache(maxsize=1)
def _catalog() -> tuple[CatalogEntry, ...]:
    entries = [*_sine_quotients(), *_cosecant_quotients(), *_two_parameter(), *_powers()]
    ids = [entry.id for entry in entries]
    assert len(ids) == len(set(ids)), "catalog ids must be unique"
    return tuple(sorted(entries, key=lambda entry: entry.id))


def all_entries() -> list[CatalogEntry]:
    """Every catalog entry, sorted by id."""
    return list(_catalog())


def get_entry(entry_id: str) -> CatalogEntry:
    for entry in _catalog():
        if entry.id == entry_id:
            return entry
    raise CatalogLookupError(entry_id)


def select_entries(
    family: FamilyId | str | None = None, kind: EntryKind | str | None = None
) -> list[CatalogEntry]:
    wanted_family = FamilyId(family) if family is not None else None
    wanted_kind = EntryKind(kind) if kind is not None else None
    return [
        entry
        for entry in _catalog()
        if (wanted_family is None or entry.family is wanted_family)
        and (wanted_kind is None or entry.kind is wanted_kind)
    ]
