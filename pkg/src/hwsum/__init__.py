"""Exact and numeric checks of harmonic-number and 3F2 summation identities."""

__version__ = "0.1.0"
