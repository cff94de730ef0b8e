"""Load and validate the ``TOML`` configuration files."""
