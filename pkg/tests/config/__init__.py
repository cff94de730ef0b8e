"""Provide tests for the configuration manager."""
