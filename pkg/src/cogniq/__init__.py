"""Hilbert-space and extended Bloch models of conceptual entities."""

import importlib.metadata

try:
    __version__ = importlib.metadata.version("cogniq")
except importlib.metadata.PackageNotFoundError:
    __version__ = "unknown"
