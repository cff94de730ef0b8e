"""Define utility functions shared by the whole package."""
