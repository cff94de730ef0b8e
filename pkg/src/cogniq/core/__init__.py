"""Finite-dimensional Hilbert-space machinery."""
