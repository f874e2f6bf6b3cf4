"""LaTeX renderer."""

from pitelescope.renderers.latex.renderer import LatexRenderer

__all__ = ["LatexRenderer"]
