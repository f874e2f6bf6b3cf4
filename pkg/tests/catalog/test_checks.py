from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

from pitelescope.catalog.checks import check_normalization, expected_lhs, verify_entry
from pitelescope.catalog.entries import all_entries, get_entry
from pitelescope.catalog.models import PrintedValue
from pitelescope.errors import PrecisionExhausted
from pitelescope.evaluator.numeric import richardson_limit, sum_direct, tau_numeric_sequence

TEN_DIGITS = Fraction(1, 10**10)

GOLDENS = {
    "t1.ex9": Fraction(2026423673, 10**10),
    "t1.ex14": Fraction(844343197, 10**10),
    "t12.ex29": Fraction(16508262378, 10**10),
}


@pytest.mark.parametrize("entry", all_entries(), ids=lambda entry: entry.id)
def test_normalization_is_exact(entry):
    assert check_normalization(entry)


def test_expected_lhs():
    assert expected_lhs(get_entry("t1.ex9")) == PrintedValue.normalize([(1, -2)])
    assert expected_lhs(get_entry("t12.ex29")) == PrintedValue.normalize([(1, 2), (-4, 0)])


def _mutations():
    ex9 = get_entry("t1.ex9")
    ex1 = get_entry("t1.ex1.p1q0r0")
    ex29 = get_entry("t12.ex29")
    cor16 = get_entry("t12.cor16.m2")
    yield "rho", replace(ex9, rho=ex9.rho * 2)
    yield "printed coefficient", replace(
        ex9, printed_lhs=PrintedValue.normalize([(Fraction(201, 100), -2)])
    )
    yield "printed constant", replace(
        ex29, printed_lhs=ex29.printed_lhs + PrintedValue.normalize([(Fraction(1, 100), 0)])
    )
    other_x = (Fraction(1, 2), Fraction(1, 3))
    yield "x", replace(ex9, family_params=replace(ex9.family_params, x=other_x))
    yield "p", replace(ex1, family_params=replace(ex1.family_params, p=(2,)))
    yield "term polynomial", replace(
        ex9, printed_term=replace(ex9.printed_term, poly=(Fraction(1, 9), 1, 1))
    )
    yield "term scale", replace(cor16, printed_term=replace(cor16.printed_term, scale=Fraction(2)))


@pytest.mark.parametrize("label,entry", list(_mutations()))
def test_mutations_break_normalization(label, entry):
    assert not check_normalization(entry), label


@pytest.mark.parametrize("entry_id", sorted(GOLDENS))
def test_verify_entry_goldens(entry_id):
    report = verify_entry(get_entry(entry_id), 256, TEN_DIGITS)
    assert report.passed
    assert report.label == entry_id
    assert report.abs_error < TEN_DIGITS
    assert abs(report.target - GOLDENS[entry_id]) < TEN_DIGITS
    assert abs(report.approximation - GOLDENS[entry_id]) < TEN_DIGITS


def test_verify_entry_catches_wrong_value():
    ex9 = get_entry("t1.ex9")
    wrong = replace(ex9, printed_lhs=PrintedValue.normalize([(Fraction(201, 100), -2)]))
    report = verify_entry(wrong, 256, TEN_DIGITS)
    assert not report.passed


def test_verify_entry_needs_resolvable_tolerance():
    with pytest.raises(PrecisionExhausted):
        verify_entry(get_entry("t1.ex9"), 32, Fraction(1, 10**15))


@pytest.mark.slow
@pytest.mark.parametrize("entry", all_entries(), ids=lambda entry: entry.id)
def test_verify_full_catalog(entry):
    report = verify_entry(entry, 256, TEN_DIGITS)
    assert report.passed, report.to_json()


@pytest.mark.slow
@pytest.mark.parametrize("entry", all_entries(), ids=lambda entry: entry.id)
def test_tau_differences_shrink(entry):
    nodes = [2**t for t in range(4, 13)]
    values = tau_numeric_sequence(entry.family_params, nodes, 128)
    gaps = [abs(later - earlier) for earlier, later in zip(values, values[1:])]
    for wider, narrower in zip(gaps, gaps[1:]):
        assert narrower * Fraction(3, 2) <= wider


@pytest.mark.slow
@pytest.mark.parametrize("entry", all_entries(), ids=lambda entry: entry.id)
def test_extrapolation_beats_direct_summation(entry):
    params = entry.family_params
    extrapolated = richardson_limit(params, base=16, levels=9, precision=256)
    direct = sum_direct(params, 128, 100_000)
    assert extrapolated.abs_error * 10**6 <= direct.abs_error
