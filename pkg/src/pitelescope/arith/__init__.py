"""Exact and high-precision arithmetic."""

from pitelescope.arith.bigreal import BigReal
from pitelescope.arith.constants import pi_reference, sin_pi_exact, sin_pi_numeric
from pitelescope.arith.rational import (
    ExactRational,
    factorial,
    format_rational,
    parse_rational,
    pochhammer,
)
from pitelescope.arith.surd import SurdExpr, surd_eval, surd_mul

__all__ = [
    "BigReal",
    "ExactRational",
    "SurdExpr",
    "factorial",
    "format_rational",
    "parse_rational",
    "pi_reference",
    "pochhammer",
    "sin_pi_exact",
    "sin_pi_numeric",
    "surd_eval",
    "surd_mul",
]
