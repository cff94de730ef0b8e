"""Load and validate the datasets given to the command-line interface.

Four kinds of datasets are understood:

- ``"sequential"``: JSON ``{"questions": ["C", "G"], "order_CG": {"yy": ..,
  "yn": .., "ny": .., "nn": ..}, "order_GC": {...}}``;
- ``"membership"``: CSV with header ``item,mu_a,mu_b,mu_comb,combination``;
- ``"correlations"``: JSON with four :math:`2\\times 2` joint tables keyed
  ``"11"``, ``"12"``, ``"21"``, ``"22"``;
- ``"occupation_counts"``: JSON ``{"N": .., "M": .., "counts": {"2,0": ..}}``.

Every problem is reported as a :class:`.SchemaError` giving the faulty record
and field.

"""

import json
import logging
from collections.abc import Callable
from dataclasses import dataclass
from importlib.resources.abc import Traversable
from io import BytesIO
from pathlib import Path
from typing import Any, Literal, NamedTuple, NoReturn

import numpy as np
import pandas as pd

from cogniq.core.errors import ContractViolation, SchemaError
from cogniq.fock.records import (
    SETTINGS,
    JointCorrelationSet,
    MembershipRecord,
    joint_table_to_expectation,
)
from cogniq.order_effects.sequential_table import (
    ANSWER_PAIRS,
    SequentialTable,
)

DATASET_KINDS_T = Literal[
    "sequential", "membership", "correlations", "occupation_counts"
]
MEMBERSHIP_COLUMNS = ("item", "mu_a", "mu_b", "mu_comb", "combination")


class OccupationCounts(NamedTuple):
    """Observed occupation configurations of ``N`` entities in ``M`` cells."""

    n_entities: int
    n_cells: int
    counts: dict[str, int]


@dataclass(frozen=True, eq=False)
class Dataset:
    """A validated dataset.

    Parameters
    ----------
    kind : {"sequential", "membership", "correlations", "occupation_counts"}
        What the file holds.
    payload : Any
        The parsed records: a :class:`.SequentialTable`, a list of
        :class:`.MembershipRecord`, a :class:`.JointCorrelationSet` or an
        :class:`OccupationCounts`.
    source_path : str
        Where the dataset was read.
    raw : bytes
        Content of the file, used to compute digests.

    """

    kind: DATASET_KINDS_T
    payload: Any
    source_path: str
    raw: bytes = b""


def _fail(
    message: str, record_index: int | None, field: str | None
) -> NoReturn:
    """Log and raise a :class:`.SchemaError`."""
    logging.error(message)
    raise SchemaError(message, record_index=record_index, field=field)


def _read_bytes(path: Path | str | Traversable) -> bytes:
    """Read the file, which may be a bundled resource."""
    if isinstance(path, str):
        path = Path(path)
    try:
        return path.read_bytes()
    except OSError as e:
        _fail(f"Cannot read {path}: {e}", None, None)


def _parse_json(raw: bytes, source: str) -> Any:
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        _fail(f"Invalid JSON in {source}: {e}", None, None)


def _probability(value: Any, field: str) -> float:
    """Check that ``value`` is a number in [0, 1]."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(f"{field} = {value!r} is not a number", None, field)
    if not 0.0 <= value <= 1.0:
        _fail(f"{field} = {value} is not a probability", None, field)
    return float(value)


def parse_sequential(document: Any) -> SequentialTable:
    """Build a :class:`.SequentialTable` from its JSON document."""
    if not isinstance(document, dict):
        _fail("Sequential dataset must be a JSON object", None, None)
    questions = document.get("questions")
    if (
        not isinstance(questions, list)
        or len(questions) != 2
        or not all(isinstance(q, str) for q in questions)
    ):
        _fail(
            f"Need two question labels, got {questions!r}", None, "questions"
        )
    a, b = questions
    orders = []
    for label in (f"order_{a}{b}", f"order_{b}{a}"):
        order = document.get(label)
        if not isinstance(order, dict) or set(order) != set(ANSWER_PAIRS):
            _fail(
                f"{label} must map {ANSWER_PAIRS} to probabilities",
                None,
                label,
            )
        orders.append(
            {
                pair: _probability(order[pair], f"{label}.{pair}")
                for pair in ANSWER_PAIRS
            }
        )
    try:
        return SequentialTable((a, b), *orders)
    except ContractViolation as e:
        _fail(str(e), None, None)


def parse_membership(raw: bytes) -> list[MembershipRecord]:
    """Build the records of a membership CSV."""
    try:
        frame = pd.read_csv(
            BytesIO(raw), dtype={"item": str, "combination": str}
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        _fail(f"Invalid CSV: {e}", None, None)
    missing = [col for col in MEMBERSHIP_COLUMNS if col not in frame.columns]
    if missing:
        _fail(f"Missing columns {missing}", None, missing[0])

    records = []
    for index, row in enumerate(frame.itertuples(index=False)):
        for field in MEMBERSHIP_COLUMNS:
            if pd.isna(getattr(row, field)):
                _fail(f"Row {index}: {field} is empty", index, field)
        for field in ("mu_a", "mu_b", "mu_comb"):
            value = getattr(row, field)
            if not isinstance(value, (int, float, np.number)):
                _fail(f"Row {index}: {field} = {value!r}", index, field)
            if not 0.0 <= value <= 1.0:
                _fail(
                    f"Row {index}: {field} = {value} is not a probability",
                    index,
                    field,
                )
        try:
            records.append(
                MembershipRecord(
                    item=row.item,
                    mu_a=row.mu_a,
                    mu_b=row.mu_b,
                    mu_comb=row.mu_comb,
                    combination=row.combination.strip(),
                )
            )
        except ContractViolation as e:
            _fail(f"Row {index}: {e}", index, "combination")
    return records


def parse_correlations(document: Any) -> JointCorrelationSet:
    """Build the correlations of the four joint tables."""
    if not isinstance(document, dict):
        _fail("Correlations dataset must be a JSON object", None, None)
    expectations = []
    for index, key in enumerate(SETTINGS):
        if key not in document:
            _fail(f"Missing joint table {key!r}", index, key)
        try:
            table = np.asarray(document[key], dtype=float)
            expectations.append(joint_table_to_expectation(table))
        except (ContractViolation, TypeError, ValueError) as e:
            _fail(f"Joint table {key!r}: {e}", index, key)
    return JointCorrelationSet(*expectations)


def parse_occupation_counts(document: Any) -> OccupationCounts:
    """Build the observed occupation counts."""
    if not isinstance(document, dict):
        _fail("Occupation dataset must be a JSON object", None, None)
    sizes = []
    for field in ("N", "M"):
        value = document.get(field)
        if isinstance(value, bool) or not isinstance(value, int):
            _fail(f"{field} = {value!r} is not an integer", None, field)
        sizes.append(value)
    counts = document.get("counts", {})
    if not isinstance(counts, dict):
        _fail("counts must map configurations to integers", None, "counts")
    for index, (key, count) in enumerate(counts.items()):
        if isinstance(count, bool) or not isinstance(count, int) or count < 0:
            _fail(f"counts[{key!r}] = {count!r}", index, "counts")
    return OccupationCounts(sizes[0], sizes[1], dict(counts))


PARSERS: dict[str, Callable[[bytes, str], Any]] = {
    "sequential": lambda raw, src: parse_sequential(_parse_json(raw, src)),
    "membership": lambda raw, src: parse_membership(raw),
    "correlations": lambda raw, src: parse_correlations(
        _parse_json(raw, src)
    ),
    "occupation_counts": lambda raw, src: parse_occupation_counts(
        _parse_json(raw, src)
    ),
}


def load_dataset(
    path: Path | str | Traversable, kind: DATASET_KINDS_T
) -> Dataset:
    """Read and validate a dataset.

    Parameters
    ----------
    path : pathlib.Path | str | importlib.resources.abc.Traversable
        File to read; bundled data are given as resources, see
        :data:`.clinton_gore`.
    kind : {"sequential", "membership", "correlations", "occupation_counts"}
        What the file holds.

    Raises
    ------
    SchemaError
        If the file does not match the schema of ``kind``.

    """
    if kind not in PARSERS:
        raise ContractViolation(
            f"Unknown dataset {kind = }, expected one of {list(PARSERS)}"
        )
    raw = _read_bytes(path)
    payload = PARSERS[kind](raw, str(path))
    logging.info(f"Loaded {kind} dataset from {path}")
    return Dataset(kind, payload, str(path), raw)
