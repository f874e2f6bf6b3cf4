from __future__ import annotations

from fractions import Fraction

import pytest

from pitelescope.arith.bigreal import BigReal, check_precision
from pitelescope.errors import DomainError


def test_fraction_round_trip():
    third = BigReal.from_fraction(Fraction(1, 3), 128)
    assert abs(third * 3 - 1) < BigReal.epsilon(120)
    assert abs(third - Fraction(1, 3)) < Fraction(1, 2**120)


def test_integer_fast_paths():
    value = BigReal.from_int(7, 64)
    assert abs(value.mul_int(6).div_int(21) - 2) < BigReal.epsilon(60)
    with pytest.raises(ZeroDivisionError):
        value.div_int(0)


def test_roots():
    assert abs(BigReal.from_int(2, 128).sqrt() ** 2 - 2) < BigReal.epsilon(120)
    assert abs(BigReal.from_int(27, 128).nth_root(3) - 3) < BigReal.epsilon(120)
    with pytest.raises(DomainError):
        BigReal.from_int(-4, 64).sqrt()


def test_mixed_precision_takes_smaller():
    wide = BigReal.from_int(1, 256)
    narrow = BigReal.from_int(1, 64)
    assert (wide + narrow).precision == 64


def test_comparisons_and_sign():
    a = BigReal.from_fraction(Fraction(-3, 4), 64)
    assert a < 0
    assert a.sign() == -1
    assert abs(a) > Fraction(1, 2)
    assert BigReal.zero(64).is_zero()


def test_conversions():
    value = BigReal.from_fraction(Fraction(1, 1000), 64)
    assert value.to_float() == pytest.approx(1e-3)
    assert value.log10_magnitude() == pytest.approx(-3)
    assert value.to_decimal_string(3).startswith("0.001")


def test_precision_floor():
    check_precision(16)
    with pytest.raises(DomainError):
        check_precision(15)
