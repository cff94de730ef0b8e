"""Check the fit of 2D projective models."""

import numpy as np
import pytest

from cogniq.order_effects.fit_hilbert import (
    FitSettings,
    fit_hilbert_2d,
    hilbert_variables,
    wrap_angles,
)
from cogniq.order_effects.hilbert_model import qubit_table_vector


@pytest.mark.smoke
class TestHelpers:
    """Variables and angle wrapping."""

    def test_variables(self) -> None:
        """Angles are not bounded."""
        variables = hilbert_variables()
        assert len(variables) == 6
        assert all(not var.bounded for var in variables)

    def test_wrap_angles(self) -> None:
        """Wrapped angles describe the same model."""
        angles = np.array([-0.5, 7.0, 4.0, -2.0, 3.5, 10.0])
        wrapped = wrap_angles(angles)
        assert np.all(wrapped[::2] >= 0.0) and np.all(wrapped[::2] <= np.pi)
        assert np.all(wrapped[1::2] >= 0.0)
        assert np.all(wrapped[1::2] < 2.0 * np.pi)
        assert np.allclose(
            qubit_table_vector(wrapped), qubit_table_vector(angles)
        )


class TestFitHilbert:
    """Fits of data with and without order effects beyond 2D models."""

    settings = FitSettings(restarts=6, seed=1)

    def test_born_table(self, born_table) -> None:
        """A table generated by a qubit is fitted exactly."""
        report = fit_hilbert_2d(born_table, self.settings)
        assert report.residual < 1e-6, f"{report.residual = }"
        assert abs(report.parameters["gamma"]) == pytest.approx(
            0.5, abs=1e-4
        )

    def test_clinton_gore(self, clinton_gore_table) -> None:
        """The poll violates :math:`q' = 0`: the residual stays positive."""
        report = fit_hilbert_2d(clinton_gore_table, self.settings)
        assert report.residual > 1e-2, f"{report.residual = }"
        predicted_q_prime = report.to_dict()["predicted_q_prime"]
        assert abs(predicted_q_prime) < 1e-10, f"{predicted_q_prime = }"

    def test_deterministic(self, clinton_gore_table) -> None:
        """The same seed gives the same fit."""
        settings = FitSettings(restarts=3, seed=5, polish=False)
        first = fit_hilbert_2d(clinton_gore_table, settings)
        second = fit_hilbert_2d(clinton_gore_table, settings)
        assert first.parameters == second.parameters
        assert first.iterations == second.iterations

    def test_report(self, born_table) -> None:
        """The report holds the predicted table and its diagnostics."""
        report = fit_hilbert_2d(born_table, FitSettings(restarts=2))
        as_dict = report.to_dict()
        assert set(as_dict) >= {
            "parameters",
            "residual",
            "predicted",
            "predicted_q",
            "predicted_q_prime",
            "iterations",
            "converged",
        }
        assert as_dict["predicted"]["questions"] == ["A", "B"]
