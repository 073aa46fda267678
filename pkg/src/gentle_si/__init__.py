"""Presentations of semi-invariant rings for colored gentle string algebras."""

__version__ = "0.1.0"
