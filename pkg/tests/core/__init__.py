"""Define tests for modules and functions from ``core`` package."""
