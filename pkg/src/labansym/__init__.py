"""Permutation-group engine for Laban's spatial reference solids."""

__version__ = "0.1.0"
