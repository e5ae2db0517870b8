"""Exact weight-diagram engine.

Builds recursive projective resolutions over weight diagrams, enumerates the
move-generated functions that index their summands, and cross-checks the
summand counts against exact generating functions.
"""

__version__ = "0.1.0"
