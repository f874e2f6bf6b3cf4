"""Parameter tuples of the two series families and their validation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from pitelescope.arith.rational import RationalLike, format_rational
from pitelescope.errors import InvalidParameters

T1_CONSTRAINT = "min{rᵢ, pᵢ+qᵢ−rᵢ+1} ≥ 0"
T12_CONSTRAINT = "min{pᵢ, qᵢ} ≥ 0"


class FamilyId(str, Enum):
    """Series family: T1 sums to prod sin(pi x)/pi^m, T12 to pi^m/prod sin(pi x)."""

    T1 = "T1"
    T12 = "T12"

    @property
    def pi_sign(self) -> int:
        return -1 if self is FamilyId.T1 else 1


@dataclass(frozen=True)
class Factor:
    """One index i of a parameter tuple."""

    x: Fraction
    p: int
    q: int
    r: int


@dataclass(frozen=True)
class SeriesParams:
    """The (m, x, p, q, r) tuple defining one series instance."""

    family: FamilyId
    m: int
    x: tuple[Fraction, ...]
    p: tuple[int, ...]
    q: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", FamilyId(self.family))
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))

    @classmethod
    def build(
        cls,
        family: FamilyId | str,
        x: Sequence[RationalLike],
        p: Sequence[int] | None = None,
        q: Sequence[int] | None = None,
        r: Sequence[int] | None = None,
    ) -> SeriesParams:
        """m from len(x); omitted p, q, r default to zeros."""
        m = len(x)
        zeros = (0,) * m
        return cls(
            family=FamilyId(family),
            m=m,
            x=tuple(Fraction(v) for v in x),
            p=tuple(p) if p is not None else zeros,
            q=tuple(q) if q is not None else zeros,
            r=tuple(r) if r is not None else zeros,
        )

    def factors(self) -> Iterator[Factor]:
        for x, p, q, r in zip(self.x, self.p, self.q, self.r):
            yield Factor(x, p, q, r)

    def describe(self) -> str:
        xs = ",".join(format_rational(v) for v in self.x)
        return (
            f"{self.family.value} m={self.m} x=({xs}) p={list(self.p)} "
            f"q={list(self.q)} r={list(self.r)}"
        )


def validate(params: SeriesParams) -> list[str]:
    """Every violated constraint of ``params``; an empty list means valid."""
    violations: list[str] = []
    if params.m < 1:
        violations.append(f"m must be at least 1, got {params.m}")
    lengths = {"x": len(params.x), "p": len(params.p), "q": len(params.q), "r": len(params.r)}
    for name, length in lengths.items():
        if length != params.m:
            violations.append(f"len({name}) = {length} does not match m = {params.m}")
    if violations:
        return violations

    for i, factor in enumerate(params.factors(), start=1):
        if not 0 < factor.x < 1:
            violations.append(f"x{i} = {format_rational(factor.x)} is outside (0, 1)")
        if params.family is FamilyId.T1:
            if factor.r < 0:
                violations.append(f"r{i} = {factor.r} < 0 violates {T1_CONSTRAINT}")
            upper = factor.p + factor.q - factor.r + 1
            if upper < 0:
                violations.append(
                    f"p{i}+q{i}−r{i}+1 = {upper} < 0 violates {T1_CONSTRAINT}"
                )
        else:
            if factor.p < 0:
                violations.append(f"p{i} = {factor.p} < 0 violates {T12_CONSTRAINT}")
            if factor.q < 0:
                violations.append(f"q{i} = {factor.q} < 0 violates {T12_CONSTRAINT}")
    return violations


def require_valid(params: SeriesParams) -> None:
    violations = validate(params)
    if violations:
        raise InvalidParameters(violations)
