"""Gather in a single object all the configurable parameters."""

import logging
from typing import Any, Literal

from cogniq.bloch.specs import (
    FIT_MEMBRANE_CONFIG,
    REPLICABILITY_CONFIG,
    UNIVERSAL_CONFIG,
)
from cogniq.config.table_spec import TableConfSpec
from cogniq.fock.specs import STATISTICS_CONFIG
from cogniq.order_effects.specs import FIT_HILBERT_CONFIG

#: Link every configured operation to its table in the bundled ``TOML``.
CONFIG_KEYS = {
    "fit_hilbert": "fit_hilbert",
    "fit_membrane": "fit_membrane",
    "universal": "universal",
    "replicability": "replicability",
    "statistics": "statistics",
}


class ConfSpec:
    """Define structure of a configuration object."""

    def __init__(
        self,
        fit_hilbert: str = "",
        fit_membrane: str = "",
        universal: str = "",
        replicability: str = "",
        statistics: str = "",
        **kwargs,
    ) -> None:
        """Declare the tables, named as in the ``TOML``."""
        table_of_specs = []
        for configured_object, table_entry, specs in (
            ("fit_hilbert", fit_hilbert, FIT_HILBERT_CONFIG),
            ("fit_membrane", fit_membrane, FIT_MEMBRANE_CONFIG),
            ("universal", universal, UNIVERSAL_CONFIG),
            ("replicability", replicability, REPLICABILITY_CONFIG),
            ("statistics", statistics, STATISTICS_CONFIG),
        ):
            if table_entry:
                table_of_specs.append(
                    TableConfSpec(configured_object, table_entry, specs)
                )
        self.tables_of_specs = tuple(table_of_specs)

    def __repr__(self) -> str:
        """Print info on how object was instantiated."""
        tables_info = (
            [f"{self.__class__.__name__}("]
            + ["\t" + table.__repr__() for table in self.tables_of_specs]
            + [")"]
        )
        return "\n".join(tables_info)

    def _get_proper_table(
        self,
        table_id: str,
        id_type: Literal[
            "configured_object", "table_entry"
        ] = "configured_object",
    ) -> TableConfSpec:
        """Get the :class:`.TableConfSpec` named ``table_id``."""
        for table in self.tables_of_specs:
            if table_id == getattr(table, id_type):
                return table
        raise ValueError(
            f"No table with {id_type} attribute = {table_id} found in "
            f"{self.__repr__()}."
        )

    def prepare(self, toml_fulldict: dict[str, dict[str, Any]]) -> bool:
        """Check that all the tables in ``toml_fulldict`` are valid.

        Missing optional keys are set to their default value.

        """
        validations = []
        for table_name, toml_subdict in toml_fulldict.items():
            spec = self._get_proper_table(table_name)
            validations.append(spec.prepare(toml_subdict))

        all_is_validated = all(validations)
        if not all_is_validated:
            logging.error(
                "At least one error was raised treating configuration"
            )
        return all_is_validated
