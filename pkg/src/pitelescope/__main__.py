"""Entry point for python -m pitelescope."""

from pitelescope.cli import app

if __name__ == "__main__":
    app()
