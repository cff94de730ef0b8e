"""Define the specifications of a ``TOML`` table."""

import logging
from collections.abc import Collection
from typing import Any, Literal

from cogniq.config.key_val_conf_spec import KeyValConfSpec


class TableConfSpec:
    """Set specifications for a table, which holds several key-value pairs."""

    def __init__(
        self,
        configured_object: Literal[
            "fit_hilbert",
            "fit_membrane",
            "universal",
            "replicability",
            "statistics",
        ],
        table_entry: str,
        specs: Collection[KeyValConfSpec],
        can_have_untested_keys: bool = False,
    ) -> None:
        """Set a table of properties. Correspond to a [table] in the ``.toml``.

        Parameters
        ----------
        configured_object : str
            Name of the operation that will receive associated parameters.
        table_entry : str
            Name of the table in the ``.toml`` file, without brackets.
        specs : Collection[KeyValConfSpec]
            The :class:`.KeyValConfSpec` objects in the current table.
        can_have_untested_keys : bool, optional
            If unknown keys in the ``.toml`` should be tolerated. The default
            is False.

        """
        self.configured_object = configured_object
        self.table_entry = table_entry
        self.specs_as_dict = {spec.key: spec for spec in specs}
        self.can_have_untested_keys = can_have_untested_keys

    def __repr__(self) -> str:
        """Print how the object was created."""
        return (
            f"TableConfSpec: {self.configured_object:>16s} -> "
            f"[{self.table_entry}]"
        )

    def _get_proper_spec(self, spec_name: str) -> KeyValConfSpec | None:
        """Get the specification for the property named ``spec_name``."""
        spec = self.specs_as_dict.get(spec_name, None)
        if spec is not None:
            return spec
        if self.can_have_untested_keys:
            return None
        logging.error(
            f"The table {self.table_entry} has no specs for property "
            f"{spec_name}"
        )
        return None

    def prepare(self, toml_subdict: dict[str, Any]) -> bool:
        """Validate the config dict and fill in the missing defaults."""
        validations = self._validate(toml_subdict)
        self._post_treat(toml_subdict)
        return validations

    def _validate(self, toml_subdict: dict[str, Any]) -> bool:
        """Check that key-values in ``toml_subdict`` are valid."""
        validations = [self._mandatory_keys_are_present(toml_subdict.keys())]
        for key, val in toml_subdict.items():
            spec = self._get_proper_spec(key)
            if spec is None:
                validations.append(self.can_have_untested_keys)
                continue
            validations.append(spec.validate(val))

        all_is_validated = all(validations)
        if not all_is_validated:
            logging.error(
                f"At least one error was raised treating {self.table_entry}"
            )
        return all_is_validated

    def _post_treat(self, toml_subdict: dict[str, Any]) -> None:
        """Give the non-mandatory missing keys their default value."""
        for key, spec in self.specs_as_dict.items():
            if key not in toml_subdict:
                toml_subdict[key] = spec.default_value

    def _mandatory_keys_are_present(self, toml_keys: Collection[str]) -> bool:
        """Ensure that all the mandatory parameters are defined."""
        they_are_all_present = True
        for key, spec in self.specs_as_dict.items():
            if not spec.is_mandatory or key in toml_keys:
                continue
            they_are_all_present = False
            logging.error(f"The key {key} should be given but was not found.")
        return they_are_all_present
