"""Define the base objects constraining values/types of config parameters."""

import logging
from collections.abc import Collection
from dataclasses import dataclass
from typing import Any


@dataclass
class KeyValConfSpec:
    """Set specifications for a single key-value pair.

    Parameters
    ----------
    key : str
        Name of the attribute.
    types : tuple[type, ...]
        Allowed types for the value. Prefer giving a tuple of types, even if
        there is only one possible type.
    description : str
        A markdown string to describe the property.
    default_value : Any
        Used if the property is not mandatory and was not provided.
    allowed_values : Collection[Any] | None, optional
        A set of allowed values. The default is None, in which case no
        checking is performed.
    bounds : tuple[float, float] | None, optional
        Inclusive range of numeric values. The default is None.
    is_mandatory : bool, optional
        If the property must be given. The default is False.

    """

    key: str
    types: tuple[type, ...]
    description: str
    default_value: Any

    allowed_values: Collection[Any] | None = None
    bounds: tuple[float, float] | None = None
    is_mandatory: bool = False

    def __post_init__(self) -> None:
        """Force ``self.types`` to be a tuple of types."""
        if isinstance(self.types, type):
            self.types = (self.types,)

    def validate(self, toml_value: Any) -> bool:
        """Check that the given ``toml`` line is valid."""
        valid = (
            self.is_valid_type(toml_value)
            and self.is_valid_value(toml_value)
            and self.is_in_bounds(toml_value)
        )
        if not valid:
            logging.error(f"An error was detected while treating {self.key}")
        return valid

    def is_valid_type(self, toml_value: Any) -> bool:
        """Check that the value has the proper typing.

        Booleans are not accepted where integers are expected.

        """
        if isinstance(toml_value, bool) and bool not in self.types:
            logging.warning(f"Type error in {self.key}: {toml_value = }")
            return False
        if isinstance(toml_value, self.types):
            return True
        logging.warning(
            f"Type error in {self.key}. {toml_value = } type not in "
            f"{self.types = }"
        )
        return False

    def is_valid_value(self, toml_value: Any) -> bool:
        """Check that the value is accepted."""
        if self.allowed_values is None:
            return True
        values = toml_value if isinstance(toml_value, list) else [toml_value]
        if all(value in self.allowed_values for value in values):
            return True
        logging.error(
            f"{self.key}: {toml_value = } is not in {self.allowed_values = }"
        )
        return False

    def is_in_bounds(self, toml_value: Any) -> bool:
        """Check that a numeric value lies in ``bounds``."""
        if self.bounds is None:
            return True
        low, high = self.bounds
        if low <= toml_value <= high:
            return True
        logging.error(f"{self.key}: {toml_value = } is not in {self.bounds}")
        return False
