"""Write the reports of the command-line interface.

The ``results`` section only depends on the inputs, the flags and the seed:
keys are sorted and floats are written with their shortest round-trip
representation, so that identical runs give byte-identical results.

"""

import hashlib
import json
import logging
import math
import sys
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from cogniq.util.log_manager import get_package_version


def to_serializable(value: Any) -> Any:
    """Convert numpy objects, tuples and NaN into plain JSON values."""
    if hasattr(value, "to_dict"):
        return to_serializable(value.to_dict())
    if isinstance(value, Mapping):
        return {str(k): to_serializable(v) for k, v in value.items()}
    if hasattr(value, "_asdict"):
        return to_serializable(value._asdict())
    if isinstance(value, np.ndarray):
        return to_serializable(value.tolist())
    if isinstance(value, (list, tuple)):
        return [to_serializable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return None if math.isnan(value) else value
    return value


def inputs_digest(raw: bytes, flags: Mapping[str, Any]) -> str:
    """Give the sha256 of the input bytes and of the effective flags."""
    digest = hashlib.sha256(raw)
    digest.update(
        json.dumps(to_serializable(flags), sort_keys=True).encode("utf-8")
    )
    return digest.hexdigest()


@dataclass(frozen=True)
class Report:
    """Outcome of one command.

    Parameters
    ----------
    command : str
        Name of the subcommand.
    inputs_digest : str
        See :func:`inputs_digest`.
    results : dict[str, Any]
        Named values computed by the command.
    seed : int
        Root seed of the random generators.
    tool_version : str
        Version of the package that produced the report.

    """

    command: str
    inputs_digest: str
    results: dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    tool_version: str = field(default_factory=get_package_version)

    def results_json(self) -> str:
        """Serialize the results alone, deterministically."""
        return json.dumps(
            to_serializable(self.results), sort_keys=True, allow_nan=False
        )

    def to_json(self) -> str:
        """Serialize the whole report."""
        document = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "results": to_serializable(self.results),
            "seed": self.seed,
            "tool_version": self.tool_version,
        }
        return json.dumps(document, sort_keys=True, indent=2, allow_nan=False)


def write_report(report: Report, output: Path | None = None) -> None:
    """Write ``report`` to ``output``, or to standard output."""
    text = report.to_json() + "\n"
    if output is None:
        sys.stdout.write(text)
        return
    output.write_text(text, encoding="utf-8")
    logging.info(f"Report of {report.command} written to {output}")


def write_sweep(frame: pd.DataFrame, path: Path) -> None:
    """Write tabular data, e.g. a Born-convergence sweep, as CSV."""
    frame.to_csv(path, index=False)
    logging.info(f"{len(frame)} rows written to {path}")


def error_document(error: Exception) -> str:
    """Give the machine-readable description of ``error``."""
    return json.dumps(
        {
            "error": error.__class__.__name__,
            "message": str(error),
            "record_index": getattr(error, "record_index", None),
            "field": getattr(error, "field", None),
        },
        sort_keys=True,
    )
