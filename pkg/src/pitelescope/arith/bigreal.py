"""Precision-carrying real numbers on top of mpmath's low-level mpf layer.

Every operation passes its precision to ``mpmath.libmp`` explicitly and rounds
to nearest, so results are within half an ulp of the exact operation at the
stated precision and no global mpmath context is touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from mpmath import libmp

from pitelescope.errors import DomainError

MpfValue = Any  # raw libmp tuple (sign, man, exp, bc)
Operand = Union["BigReal", int, Fraction]

_RND = libmp.round_nearest
MIN_PRECISION = 16
_LOG10_2 = math.log10(2)


def check_precision(precision: int) -> None:
    if precision < MIN_PRECISION:
        raise DomainError(f"precision must be at least {MIN_PRECISION} bits, got {precision}")


@dataclass(frozen=True)
class BigReal:
    """A real number together with the binary precision it is accurate to."""

    value: MpfValue
    precision: int

    # --- construction -------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> BigReal:
        return cls(libmp.fzero, precision)

    @classmethod
    def from_int(cls, n: int, precision: int) -> BigReal:
        return cls(libmp.from_int(n, precision, _RND), precision)

    @classmethod
    def from_fraction(cls, q: Fraction | int, precision: int) -> BigReal:
        q = Fraction(q)
        return cls(libmp.from_rational(q.numerator, q.denominator, precision, _RND), precision)

    @classmethod
    def from_fixed(cls, mantissa: int, scale_bits: int, precision: int) -> BigReal:
        """The value mantissa * 2**-scale_bits, rounded to ``precision`` bits."""
        return cls(libmp.from_man_exp(mantissa, -scale_bits, precision, _RND), precision)

    @classmethod
    def epsilon(cls, precision: int) -> BigReal:
        """2**-precision."""
        return cls(libmp.from_man_exp(1, -precision), precision)

    def with_precision(self, precision: int) -> BigReal:
        return BigReal(libmp.mpf_pos(self.value, precision, _RND), precision)

    # --- arithmetic ---------------------------------------------------

    def _coerce(self, other: Operand) -> tuple[MpfValue, int]:
        if isinstance(other, BigReal):
            return other.value, min(self.precision, other.precision)
        if isinstance(other, int):
            return libmp.from_int(other), self.precision
        if isinstance(other, Fraction):
            return (
                libmp.from_rational(other.numerator, other.denominator, self.precision, _RND),
                self.precision,
            )
        return NotImplemented, 0

    def __add__(self, other: Operand) -> BigReal:
        value, prec = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return BigReal(libmp.mpf_add(self.value, value, prec, _RND), prec)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> BigReal:
        value, prec = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return BigReal(libmp.mpf_sub(self.value, value, prec, _RND), prec)

    def __rsub__(self, other: Operand) -> BigReal:
        value, prec = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return BigReal(libmp.mpf_sub(value, self.value, prec, _RND), prec)

    def __mul__(self, other: Operand) -> BigReal:
        value, prec = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return BigReal(libmp.mpf_mul(self.value, value, prec, _RND), prec)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> BigReal:
        value, prec = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if value == libmp.fzero:
            raise ZeroDivisionError("BigReal division by zero")
        return BigReal(libmp.mpf_div(self.value, value, prec, _RND), prec)

    def __rtruediv__(self, other: Operand) -> BigReal:
        value, prec = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if self.value == libmp.fzero:
            raise ZeroDivisionError("BigReal division by zero")
        return BigReal(libmp.mpf_div(value, self.value, prec, _RND), prec)

    def __neg__(self) -> BigReal:
        return BigReal(libmp.mpf_neg(self.value), self.precision)

    def __abs__(self) -> BigReal:
        return BigReal(libmp.mpf_abs(self.value), self.precision)

    def __pow__(self, n: int) -> BigReal:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0 and self.is_zero():
            raise ZeroDivisionError("BigReal zero to a negative power")
        return BigReal(libmp.mpf_pow_int(self.value, n, self.precision, _RND), self.precision)

    def mul_int(self, n: int) -> BigReal:
        return BigReal(libmp.mpf_mul_int(self.value, n, self.precision, _RND), self.precision)

    def div_int(self, n: int) -> BigReal:
        if n == 0:
            raise ZeroDivisionError("BigReal division by zero")
        return BigReal(
            libmp.mpf_div(self.value, libmp.from_int(n), self.precision, _RND), self.precision
        )

    def sqrt(self) -> BigReal:
        if self.sign() < 0:
            raise DomainError("square root of a negative number")
        return BigReal(libmp.mpf_sqrt(self.value, self.precision, _RND), self.precision)

    def nth_root(self, n: int) -> BigReal:
        if n < 1:
            raise DomainError(f"root index must be positive, got {n}")
        if n == 1:
            return self
        if self.sign() < 0:
            raise DomainError("root of a negative number")
        return BigReal(libmp.mpf_nthroot(self.value, n, self.precision, _RND), self.precision)

    # --- comparison ---------------------------------------------------

    def _cmp(self, other: Operand) -> int:
        value, _ = self._coerce(other)
        if value is NotImplemented:
            raise TypeError(f"cannot compare BigReal with {type(other).__name__}")
        return int(libmp.mpf_cmp(self.value, value))

    def __lt__(self, other: Operand) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Operand) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Operand) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Operand) -> bool:
        return self._cmp(other) >= 0

    def sign(self) -> int:
        return int(libmp.mpf_sign(self.value))

    def is_zero(self) -> bool:
        return bool(self.value == libmp.fzero)

    # --- conversion ---------------------------------------------------

    def to_float(self) -> float:
        return float(libmp.to_float(self.value))

    def to_decimal_string(self, digits: int | None = None) -> str:
        """Decimal rendering with ``digits`` significant digits (all reliable ones by default)."""
        if digits is None:
            digits = max(1, int(self.precision * _LOG10_2))
        return str(libmp.to_str(self.value, digits))

    def log10_magnitude(self) -> float:
        """log10 |self|, or -inf for zero."""
        if self.is_zero():
            return -math.inf
        log_value = libmp.mpf_log(libmp.mpf_abs(self.value), 53, _RND)
        return float(libmp.to_float(log_value)) / math.log(10)

    def __str__(self) -> str:
        return self.to_decimal_string()

    def __float__(self) -> float:
        return self.to_float()
