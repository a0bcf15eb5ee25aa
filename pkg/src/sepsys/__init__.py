"""Vertex-separating path and tree systems: constructions, verification, exact search."""

__version__ = "0.1.0"
