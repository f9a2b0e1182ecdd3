"""Exact knot-concordance and lattice-embedding invariants."""

__version__ = "0.1.0"
