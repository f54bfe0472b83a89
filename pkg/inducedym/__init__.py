"""Induced lattice gauge model toolkit for U(N_c)."""

__version__ = "0.1.0"
