"""Check the CHSH inequality on joint measurements."""

import json
import math

import numpy as np
import pytest

from cogniq.constants import singlet_correlations as singlet_file
from cogniq.fock.chsh import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    chsh_value,
    classical_chsh_bound,
    correlations_from_tables,
    singlet_correlations,
    singlet_tables,
)
from cogniq.fock.records import JointCorrelationSet


@pytest.mark.smoke
class TestCHSH:
    """Value of the CHSH expression."""

    def test_classical_bound(self) -> None:
        """Deterministic strategies reach exactly 2."""
        obtained = classical_chsh_bound()
        assert obtained == CLASSICAL_BOUND == 2.0

    def test_singlet(self) -> None:
        """Optimal settings reach the quantum maximum, not beyond."""
        obtained = chsh_value(singlet_correlations())
        assert abs(obtained.s) == pytest.approx(TSIRELSON_BOUND)
        assert obtained.violated
        assert not obtained.tsirelson_excess

    def test_bundled_tables(self) -> None:
        """The bundled tables are those of the singlet."""
        document = json.loads(singlet_file.read_text(encoding="utf-8"))
        tables = {key: np.array(value) for key, value in document.items()}
        obtained = chsh_value(correlations_from_tables(tables))
        expected = -2.0 * math.sqrt(2.0)
        assert obtained.s == pytest.approx(expected), (
            f"{obtained.s = } but {expected = }"
        )

    def test_local_correlations(self) -> None:
        """Independent outcomes respect the inequality."""
        tables = {key: np.full((2, 2), 0.25) for key in ("11", "12", "21")}
        tables["22"] = np.full((2, 2), 0.25)
        obtained = chsh_value(correlations_from_tables(tables))
        assert obtained.s == pytest.approx(0.0)
        assert not obtained.violated

    def test_beyond_quantum(self) -> None:
        """A Popescu-Rohrlich box is flagged."""
        obtained = chsh_value(JointCorrelationSet(1.0, 1.0, 1.0, -1.0))
        assert obtained.s == pytest.approx(4.0)
        assert obtained.violated
        assert obtained.tsirelson_excess

    def test_aligned_settings(self) -> None:
        """Equal settings give perfectly anti-correlated outcomes."""
        tables = singlet_tables((0.0, 0.0, 0.0, 0.0))
        for key, table in tables.items():
            expected = np.array([[0.0, 0.5], [0.5, 0.0]])
            assert np.allclose(table, expected), f"{key}: {table}"
