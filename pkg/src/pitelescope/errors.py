"""Exception hierarchy."""

from __future__ import annotations

from typing import Sequence


class TelescopeError(Exception):
    """Base class for all pitelescope errors."""


class ZeroDivisor(TelescopeError, ZeroDivisionError):
    """A factor of a negative-index shifted factorial vanished."""


class NegativeFactorial(TelescopeError, ValueError):
    """Factorial requested for a negative integer."""


class DomainError(TelescopeError, ValueError):
    """Argument outside the domain of an operation."""


class CancellationFailure(TelescopeError, ArithmeticError):
    """The two leading bracket coefficients did not vanish."""


class PrecisionExhausted(TelescopeError, ArithmeticError):
    """A tolerance or truncation bound finer than the precision can resolve."""


class InvalidParameters(TelescopeError, ValueError):
    """Series parameters violate the constraints of their family."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class CatalogLookupError(TelescopeError, KeyError):
    """No catalog entry with the given id."""

    def __str__(self) -> str:
        return f"unknown catalog entry: {self.args[0]}"
