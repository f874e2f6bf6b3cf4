"""Pitelescope - telescoping series for products of sines over powers of pi."""

__version__ = "0.1.0"
