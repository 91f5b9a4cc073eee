"""Decorated graph complexes, their homology, and a Chevalley-Eilenberg oracle."""

__version__ = "0.1.0"
