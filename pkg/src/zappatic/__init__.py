"""Braid monodromy presentations of Galois covers and their reduction to S_n."""

__version__ = "0.1.0"
