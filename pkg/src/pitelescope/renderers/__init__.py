"""Renderers module."""

from pitelescope.renderers.base import BaseRenderer

__all__ = ["BaseRenderer"]
