"""Define general-use fixtures."""

import pytest

from cogniq.constants import clinton_gore
from cogniq.io.datasets import load_dataset
from cogniq.order_effects.sequential_table import SequentialTable


@pytest.fixture(scope="session")
def clinton_gore_table() -> SequentialTable:
    """Give the bundled Clinton/Gore honesty poll."""
    return load_dataset(clinton_gore, "sequential").payload


@pytest.fixture(scope="session")
def born_table() -> SequentialTable:
    """Give a table predicted by a qubit, i.e. with uniform membranes.

    The Bloch vector has projections 0.3 and -0.2 on axes of cosine 0.5.

    """
    e_a, e_b, gamma = 0.3, -0.2, 0.5
    values = []
    for e_first in (e_a, e_b):
        p_first = 0.5 * (1.0 + e_first)
        same, other = 0.5 * (1.0 + gamma), 0.5 * (1.0 - gamma)
        values += [
            p_first * same,
            p_first * other,
            (1.0 - p_first) * other,
            (1.0 - p_first) * same,
        ]
    return SequentialTable.from_vector(("A", "B"), values)
