"""Exact invariants of multiplication laws and degenerations for modules
over reductive groups."""

__version__ = "0.1.0"
