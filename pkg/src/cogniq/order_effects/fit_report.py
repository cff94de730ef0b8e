"""Define :class:`FitReport`, the outcome of a fit to a sequential table."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from cogniq.order_effects.diagnostics import compute_q, compute_q_prime
from cogniq.order_effects.sequential_table import SequentialTable


@dataclass(frozen=True, eq=False)
class FitReport:
    """Hold the best parameters found and the table they predict.

    Parameters
    ----------
    parameters : dict[str, float]
        Named values of the fitted parameters.
    residual : float
        Root of the sum of squared differences between the eight predicted
        and target probabilities.
    predicted : SequentialTable
        Table predicted by the fitted model.
    iterations : int
        Total number of evaluations of the residuals, over all starts.
    converged : bool
        If ``residual`` is lower than the tolerance of the fit, or, for fits
        that cannot be exact, if the best start did converge.
    model : Any, optional
        The fitted model object.

    """

    parameters: dict[str, float]
    residual: float
    predicted: SequentialTable
    iterations: int
    converged: bool
    model: Any = field(default=None, repr=False)

    def __post_init__(self) -> None:
        """Check that the residual is a distance."""
        assert self.residual >= 0.0, f"{self.residual = } is negative"
        assert self.predicted.model_generated

    @staticmethod
    def residual_between(
        predicted: SequentialTable, target: SequentialTable
    ) -> float:
        """Give the root-sum-square distance between two tables."""
        difference = predicted.as_vector() - target.as_vector()
        return float(np.linalg.norm(difference))

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-serializable dictionary."""
        return {
            "parameters": dict(self.parameters),
            "residual": self.residual,
            "predicted": self.predicted.to_dict(),
            "predicted_q": compute_q(self.predicted),
            "predicted_q_prime": compute_q_prime(self.predicted).value,
            "iterations": self.iterations,
            "converged": self.converged,
        }
