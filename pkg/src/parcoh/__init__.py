"""Finite partial groups, their cohomology and their extensions."""

__version__ = "0.1.0"
