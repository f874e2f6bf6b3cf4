"""JSON renderer for catalog entries."""

from __future__ import annotations

import json
from typing import Sequence

from pitelescope.catalog.models import CatalogEntry
from pitelescope.catalog.serialize import entry_to_dict
from pitelescope.renderers.base import BaseRenderer


class JsonRenderer(BaseRenderer):
    """One entry renders as an object, several as an array; the output is a document either way."""

    def get_extension(self) -> str:
        return ".json"

    def render_string(self, entries: Sequence[CatalogEntry], standalone: bool = False) -> str:
        if len(entries) == 1:
            return json.dumps(entry_to_dict(entries[0]), indent=2, ensure_ascii=False) + "\n"
        payload = [entry_to_dict(entry) for entry in entries]
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
