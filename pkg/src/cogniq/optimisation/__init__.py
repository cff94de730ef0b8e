"""Fit model parameters to data with :mod:`scipy.optimize` algorithms."""
