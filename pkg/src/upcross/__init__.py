"""Exact crossing inequalities and desk-scale randomness constructions."""

__version__ = "0.1.0"
