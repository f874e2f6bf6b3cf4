"""JSON and LaTeX emission of catalog entries."""

from __future__ import annotations

import json
from typing import Any

from pitelescope.arith.rational import format_rational, parse_rational
from pitelescope.catalog.models import CatalogEntry, PrintedTerm, PrintedValue
from pitelescope.errors import DomainError
from pitelescope.renderers.latex.renderer import LatexRenderer
from pitelescope.series.params import FamilyId, SeriesParams


def entry_to_dict(entry: CatalogEntry) -> dict[str, Any]:
    params = entry.family_params
    return {
        "id": entry.id,
        "family": params.family.value,
        "m": params.m,
        "x": [format_rational(v) for v in params.x],
        "p": list(params.p),
        "q": list(params.q),
        "r": list(params.r),
        "rho": format_rational(entry.rho),
        "printed_lhs": entry.printed_lhs.to_json(),
        "printed_term": entry.printed_term.to_json(),
        "provenance": entry.provenance,
    }


def entry_from_dict(data: dict[str, Any]) -> CatalogEntry:
    try:
        params = SeriesParams(
            family=FamilyId(data["family"]),
            m=int(data["m"]),
            x=tuple(parse_rational(v) for v in data["x"]),
            p=tuple(data["p"]),
            q=tuple(data["q"]),
            r=tuple(data["r"]),
        )
        return CatalogEntry(
            id=data["id"],
            family_params=params,
            rho=parse_rational(data["rho"]),
            printed_lhs=PrintedValue.from_json(data["printed_lhs"]),
            printed_term=PrintedTerm.from_json(data["printed_term"]),
            provenance=data["provenance"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed catalog entry: {exc}") from exc


def emit_json(entry: CatalogEntry) -> str:
    return json.dumps(entry_to_dict(entry), indent=2, ensure_ascii=False)


def parse_json(text: str) -> CatalogEntry:
    return entry_from_dict(json.loads(text))


def emit_latex(entry: CatalogEntry) -> str:
    return LatexRenderer().render_string([entry])
