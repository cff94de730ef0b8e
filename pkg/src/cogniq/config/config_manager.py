"""Load, validate and complete the settings of every operation.

Settings come from a ``TOML`` file, the bundled :data:`.default_config` if the
user gives none. Every table is checked against its :class:`.TableConfSpec`
and the missing keys take their default value, so that the output can be
given as is to :class:`.FitSettings`, :class:`.MembraneFitSettings` or the
simulation functions.

"""

import logging
import tomllib
from functools import partial
from importlib.resources.abc import Traversable
from pathlib import Path
from typing import Any

from cogniq.config.full_specs import CONFIG_KEYS, ConfSpec
from cogniq.constants import default_config

SettingsT = dict[str, dict[str, Any]]


class ConfigFileNotFoundError(FileNotFoundError):
    """Raised when the configuration file is not found."""


class InvalidTomlSyntaxError(ValueError):
    """Raised for invalid TOML syntax."""


class InvalidConfigError(ValueError):
    """Raised when values do not match their specs."""


def load_settings(
    toml_path: Path | str | Traversable | None = None,
    override: SettingsT | None = None,
) -> SettingsT:
    """Give the validated settings of every configured operation.

    Parameters
    ----------
    toml_path : pathlib.Path | str | importlib.resources.abc.Traversable | None
        User configuration. The bundled one is used if not provided.
    override : dict[str, dict[str, Any]] | None, optional
        Entries set on the command line; they take precedence over the file.

    """
    if toml_path is None:
        toml_path = default_config
    settings = process_config(toml_path, CONFIG_KEYS, override=override)
    logging.debug(f"Settings from {toml_path}: {settings}")
    return settings


def process_config(
    toml_path: Path | str | Traversable,
    config_keys: dict[str, str],
    warn_mismatch: bool = False,
    override: SettingsT | None = None,
    conf_specs_t: type[ConfSpec] = ConfSpec,
) -> SettingsT:
    """Load and test the configuration file.

    Parameters
    ----------
    toml_path : pathlib.Path | str | importlib.resources.abc.Traversable
        Path to the configuration file, or reference to a bundled resource.
    config_keys : dict[str, str]
        Associate the name of the configured operation to the table in the
        configuration file.
    warn_mismatch : bool, optional
        Raise a warning if a key in a ``override`` sub-dict is not found.
    override : dict[str, dict[str, Any]] | None, optional
        To override entries in the ``TOML``.
    conf_specs_t : type[ConfSpec], optional
        The specifications that the ``TOML`` must match to be accepted.

    Returns
    -------
    dict[str, dict[str, Any]]
        The keyword arguments of every operation, eg ``fit_membrane`` will be
        passed to :class:`.MembraneFitSettings`.

    Raises
    ------
    InvalidConfigError
        If a value does not match its specifications.

    """
    toml_fulldict = _process_toml(
        _load_toml(toml_path),
        config_keys,
        warn_mismatch=warn_mismatch,
        override=override,
    )
    if not conf_specs_t(**config_keys).prepare(toml_fulldict):
        raise InvalidConfigError(f"Invalid configuration in {toml_path}")
    return toml_fulldict


def _load_toml(toml_path: Path | str | Traversable) -> SettingsT:
    """Load the whole ``TOML``, from a file or from a bundled resource."""
    if isinstance(toml_path, str):
        toml_path = Path(toml_path)

    match toml_path:
        case Path() if not toml_path.is_file():
            raise ConfigFileNotFoundError(
                f"The file {toml_path} does not exist."
            )
        case Path():
            opener, origin = partial(open, toml_path, "rb"), "file"
        case Traversable():
            opener, origin = partial(toml_path.open, "rb"), "resource"
        case _:
            raise TypeError(
                f"Unsupported type for `toml_path`: {type(toml_path)}. "
                "Expected str, Path, or Traversable."
            )

    try:
        with opener() as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise InvalidTomlSyntaxError(
            f"Invalid TOML syntax in {origin} {toml_path}: {e}"
        ) from e


def _process_toml(
    raw_toml: SettingsT,
    config_keys: dict[str, str],
    *,
    warn_mismatch: bool,
    override: SettingsT | None,
) -> SettingsT:
    """Extract the tables asked by user. Override some keys if requested.

    Parameters
    ----------
    raw_toml : dict[str, dict[str, Any]]
        Dictionary holding the whole ``TOML`` file.
    config_keys : dict[str, str]
        Keys will be the keys of the output. Values are the name of the tables
        in the configuration file. If ``config_keys = {"universal": "quick"}``
        , the output will look like ``{"universal": {<content of [quick]>}}``.
        A missing table is replaced by an empty one, filled with defaults
        afterwards.
    warn_mismatch : bool
        Check if there are discrepancies between ``override`` and the keys to
        override.
    override : dict[str, dict[str, Any]] | None
        To override some entries of the output dictionary, before even testing
        it.

    """
    missing = [name for name in config_keys.values() if name not in raw_toml]
    if missing:
        logging.info(f"No table {missing} in the configuration: defaults.")
    # Copies, so that defaults and overrides leave raw_toml untouched
    toml_fulldict = {
        key: dict(raw_toml.get(name, {})) for key, name in config_keys.items()
    }
    if override:
        _override_some_toml_entries(toml_fulldict, warn_mismatch, **override)
    return toml_fulldict


def _override_some_toml_entries(
    toml_fulldict: SettingsT,
    warn_mismatch: bool,
    **override: dict[str, Any],
) -> None:
    """Override some entries before testing."""
    for over_key, over_subdict in override.items():
        if over_key not in toml_fulldict:
            raise KeyError(
                f"You want to override entries in {over_key = }, which was "
                f"not found in {toml_fulldict.keys() = }"
            )
        conf_subdict = toml_fulldict[over_key]
        if warn_mismatch:
            for key in over_subdict.keys() - conf_subdict.keys():
                logging.warning(
                    f"You want to override {key = }, which was not found in "
                    f"{conf_subdict.keys() = }. Setting it anyway..."
                )
        conf_subdict.update(over_subdict)
