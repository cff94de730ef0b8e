"""Read datasets and write reports; the only modules touching files."""
