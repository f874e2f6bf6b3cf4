"""Catalog of printed identities."""

from pitelescope.catalog.checks import check_normalization, verify_entry
from pitelescope.catalog.entries import all_entries, get_entry, select_entries
from pitelescope.catalog.models import CatalogEntry, EntryKind, PrintedTerm, PrintedValue
from pitelescope.catalog.serialize import emit_json, emit_latex, parse_json

__all__ = [
    "CatalogEntry",
    "EntryKind",
    "PrintedTerm",
    "PrintedValue",
    "all_entries",
    "check_normalization",
    "emit_json",
    "emit_latex",
    "get_entry",
    "parse_json",
    "select_entries",
    "verify_entry",
]
