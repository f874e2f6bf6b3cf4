"""JSON renderer."""

from pitelescope.renderers.json.renderer import JsonRenderer

__all__ = ["JsonRenderer"]
