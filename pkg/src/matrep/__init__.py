"""Decide non-representability of matroids with Groebner bases."""

__version__ = "0.1.0"
