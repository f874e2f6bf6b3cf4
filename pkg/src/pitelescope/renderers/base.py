"""Base renderer class."""

from __future__ import annotations

from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from pitelescope.catalog.models import CatalogEntry


class BaseRenderer(ABC):
    """Abstract base class for catalog renderers."""

    @abstractmethod
    def render_string(self, entries: Sequence[CatalogEntry], standalone: bool = False) -> str:
        """Render entries to text; ``standalone`` wraps them in a complete document."""

    @abstractmethod
    def get_extension(self) -> str:
        """Get the file extension for this renderer's output."""

    def render(
        self, entries: Sequence[CatalogEntry], output_path: str | Path, standalone: bool = False
    ) -> None:
        """Render entries to an output file."""
        Path(output_path).write_text(self.render_string(entries, standalone), encoding="utf-8")
