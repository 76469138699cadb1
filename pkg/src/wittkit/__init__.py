"""Exact Witt vectors, modulus-curve cycles, transfers and de Rham-Witt
presentations."""

__version__ = "0.1.0"
