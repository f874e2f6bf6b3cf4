from __future__ import annotations

import json

import pytest

from pitelescope.catalog.entries import all_entries, get_entry
from pitelescope.catalog.serialize import emit_json, emit_latex, parse_json
from pitelescope.errors import DomainError
from pitelescope.renderers.json.renderer import JsonRenderer
from pitelescope.renderers.latex.renderer import LatexRenderer

KEYS = [
    "id", "family", "m", "x", "p", "q", "r", "rho", "printed_lhs", "printed_term", "provenance",
]


def test_json_schema():
    data = json.loads(emit_json(get_entry("t1.ex9")))
    assert list(data) == KEYS
    assert data["family"] == "T1"
    assert data["x"] == ["1/2", "1/2"]
    assert data["rho"] == "1/2"
    assert data["printed_lhs"] == [{"coeff": {"1": "2"}, "pi_exp": -2}]
    assert data["printed_term"]["poly"] == ["1/8", "1", "1"]


@pytest.mark.parametrize("entry_id", ["t1.ex9", "t12.ex40", "t12.cor13.x7-12.p0q0r2"])
def test_json_round_trip(entry_id):
    entry = get_entry(entry_id)
    assert parse_json(emit_json(entry)) == entry


def test_malformed_json():
    with pytest.raises(DomainError):
        parse_json('{"id": "t1.ex9"}')


def test_json_renderer_shapes():
    renderer = JsonRenderer()
    single = json.loads(renderer.render_string([get_entry("t1.ex9")]))
    several = json.loads(renderer.render_string(all_entries()[:3]))
    assert single["id"] == "t1.ex9"
    assert len(several) == 3
    assert renderer.get_extension() == ".json"


def test_latex_entry():
    text = emit_latex(get_entry("t1.ex9"))
    assert "\\begin{equation}" in text
    assert "\\frac{2}{\\pi^2}" in text
    assert "\\documentclass" not in text


def test_latex_document(tmp_path):
    path = tmp_path / "identities.tex"
    LatexRenderer().render(all_entries(), path, standalone=True)
    text = path.read_text(encoding="utf-8")
    assert text.count("\\begin{equation}") == 140
    assert "\\documentclass{article}" in text
    assert text.rstrip().endswith("\\end{document}")
