"""Check the reports of the command-line interface."""

import json
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from cogniq.core.errors import SchemaError
from cogniq.fock.chsh import CHSHResult
from cogniq.io.report import (
    Report,
    error_document,
    inputs_digest,
    to_serializable,
    write_report,
    write_sweep,
)


@pytest.mark.smoke
class TestSerializable:
    """Conversion of numpy and named objects."""

    def test_numpy(self) -> None:
        """Arrays and scalars become plain values."""
        obtained = to_serializable(
            {"a": np.array([1.0, 2.0]), "b": np.int64(3), "c": np.bool_(1)}
        )
        expected = {"a": [1.0, 2.0], "b": 3, "c": True}
        assert obtained == expected, f"{obtained = } but {expected = }"
        assert type(obtained["b"]) is int

    def test_nan(self) -> None:
        """NaN is not valid JSON."""
        assert to_serializable([float("nan"), 1.5]) == [None, 1.5]

    def test_named(self) -> None:
        """Named tuples and objects with ``to_dict`` are dictionaries."""
        obtained = to_serializable(CHSHResult(2.5, True, False))
        assert obtained == {
            "s": 2.5,
            "violated": True,
            "tsirelson_excess": False,
        }


@pytest.mark.smoke
class TestDigest:
    """Digest of the inputs."""

    def test_deterministic(self) -> None:
        """Same inputs, same digest, whatever the order of the flags."""
        first = inputs_digest(b"data", {"seed": 1, "tol": 1e-4})
        second = inputs_digest(b"data", {"tol": 1e-4, "seed": 1})
        assert first == second
        assert len(first) == 64

    @pytest.mark.parametrize(
        "raw, flags",
        (
            pytest.param(b"other", {"seed": 1}, id="data"),
            pytest.param(b"data", {"seed": 2}, id="flags"),
        ),
    )
    def test_sensitive(self, raw: bytes, flags: dict) -> None:
        """Any change of inputs changes the digest."""
        assert inputs_digest(raw, flags) != inputs_digest(
            b"data", {"seed": 1}
        )


@pytest.mark.smoke
class TestReport:
    """Writing of the reports."""

    @pytest.fixture
    def report(self) -> Report:
        """Give a small report."""
        return Report(
            command="chsh",
            inputs_digest="0" * 64,
            results={"z": 0.1, "a": np.array([1, 2])},
            seed=7,
            tool_version="0.1.0",
        )

    def test_results_json(self, report: Report) -> None:
        """Keys are sorted, floats keep their shortest representation."""
        assert report.results_json() == '{"a": [1, 2], "z": 0.1}'

    def test_to_json(self, report: Report) -> None:
        """The whole report is valid JSON."""
        document = json.loads(report.to_json())
        assert set(document) == {
            "command",
            "inputs_digest",
            "results",
            "seed",
            "tool_version",
        }
        assert document["seed"] == 7

    def test_write(self, report: Report, tmp_path: Path, capsys) -> None:
        """Reports go to a file or to the standard output."""
        output = tmp_path / "report.json"
        write_report(report, output)
        write_report(report)
        assert capsys.readouterr().out == output.read_text()

    def test_write_sweep(self, tmp_path: Path) -> None:
        """Tables are written without index."""
        path = tmp_path / "sweep.csv"
        write_sweep(pd.DataFrame({"e": [0.0, 0.5], "born": [0.5, 0.75]}), path)
        expected = ["e,born", "0.0,0.5", "0.5,0.75"]
        assert path.read_text().splitlines() == expected

    def test_error_document(self) -> None:
        """Errors keep their record and field."""
        error = SchemaError("bad", record_index=2, field="mu_a")
        obtained = json.loads(error_document(error))
        expected = {
            "error": "SchemaError",
            "message": "bad",
            "record_index": 2,
            "field": "mu_a",
        }
        assert obtained == expected, f"{obtained = } but {expected = }"
