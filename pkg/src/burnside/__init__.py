"""Exact monomial Burnside ring computations for finite p-groups."""

__version__ = "0.1.0"
