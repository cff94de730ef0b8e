"""Define the command-line interface."""
