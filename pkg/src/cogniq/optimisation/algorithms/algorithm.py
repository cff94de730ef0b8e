"""Define the Abstract Base Class of optimisation algorithms.

Abstract methods are mandatory and a ``TypeError`` will be raised if you try to
create your own algorithm and omit them.

When you add you own optimisation algorithm, do not forget to add it to the
list of implemented algorithms in the :mod:`.factory` module.

"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Collection
from typing import Any, Callable, TypedDict

import numpy as np

from cogniq.core.errors import ContractViolation
from cogniq.optimisation.design_space.variable import Variable


class OptiSol(TypedDict):
    """Hold information on the solution."""

    var: np.ndarray  # Value of variables
    fun: np.ndarray  # Value of residuals, penalties included
    objective: float  # Norm of fun
    n_evaluations: int  # Number of calls to the residuals function
    success: bool  # If optimization was successful
    message: str


ComputeResidualsT = Callable[[np.ndarray], np.ndarray]
ComputeConstraintsT = Callable[[np.ndarray], np.ndarray]


class OptimisationAlgorithm(ABC):
    """Holds the optimization parameters, the methods to optimize.

    Parameters
    ----------
    variables : Collection[Variable]
        Holds variables, their initial values, their limits.
    compute_residuals : ComputeResidualsT
        Function giving the array of residuals for an array of variable
        values. Its norm is minimized.
    compute_constraints : ComputeConstraintsT | None, optional
        Function giving the constraint evaluations for an array of variable
        values; a positive evaluation is a violated constraint. Mandatory if
        the algorithm ``supports_constraints``.
    penalty_weight : float, optional
        Factor applied to the violations when they are appended to the
        residuals.
    optimisation_algorithm_kwargs : dict[str, Any] | None, optional
        Keyword arguments for the :mod:`scipy.optimize` function; they update
        the ``_default_kwargs``.
    supports_constraints : bool
        If the method handles constraints or not.

    """

    supports_constraints: bool

    def __init__(
        self,
        *,
        variables: Collection[Variable],
        compute_residuals: ComputeResidualsT,
        compute_constraints: ComputeConstraintsT | None = None,
        penalty_weight: float = 10.0,
        optimisation_algorithm_kwargs: dict[str, Any] | None = None,
        **kwargs,
    ) -> None:
        """Instantiate the object."""
        self.variables = list(variables)
        self.compute_residuals = compute_residuals

        if self.supports_constraints and compute_constraints is None:
            raise ContractViolation(
                f"{self.__class__.__name__} needs a compute_constraints."
            )
        if not self.supports_constraints and compute_constraints is not None:
            logging.warning(
                f"{self.__class__.__name__} does not support constraints. "
                "They will be ignored."
            )
        self.compute_constraints = compute_constraints
        self.penalty_weight = penalty_weight

        if optimisation_algorithm_kwargs is None:
            optimisation_algorithm_kwargs = {}
        self.optimisation_algorithm_kwargs = (
            self._default_kwargs | optimisation_algorithm_kwargs
        )
        self.n_evaluations = 0
        self.opti_sol: OptiSol

    @property
    def variable_names(self) -> list[str]:
        """Give name of all variables."""
        return [variable.name for variable in self.variables]

    @property
    def n_var(self) -> int:
        """Give number of variables."""
        return len(self.variables)

    @property
    def _default_kwargs(self) -> dict[str, Any]:
        """Give the default optimisation algorithm kwargs."""
        return {}

    @abstractmethod
    def optimize(self, x_0: np.ndarray | None = None) -> OptiSol:
        """Set up optimization parameters and solve the problem.

        Parameters
        ----------
        x_0 : numpy.ndarray | None, optional
            Starting point. If not provided, the ``x_0`` of the variables.

        Returns
        -------
        info : OptiSol
            Gives the solution, corresponding residuals, convergence flag.

        """

    def _format_variables(
        self, x_0: np.ndarray | None = None
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Give starting point, lower and upper bounds as arrays."""
        if x_0 is None:
            x_0 = np.array([var.x_0 for var in self.variables])
        bounds = np.array([var.bounds for var in self.variables])
        x_0 = np.clip(np.asarray(x_0, dtype=float), bounds[:, 0], bounds[:, 1])
        return x_0, bounds[:, 0], bounds[:, 1]

    def _wrapper_residuals(self, var: np.ndarray) -> np.ndarray:
        """Compute residuals from an array of variable values.

        When constraints are supported, their weighted violations are
        appended to the residuals.

        """
        self.n_evaluations += 1
        residuals = np.asarray(self.compute_residuals(var), dtype=float)
        if not self.supports_constraints:
            return residuals
        assert self.compute_constraints is not None
        evaluations = np.asarray(self.compute_constraints(var), dtype=float)
        penalties = self.penalty_weight * np.maximum(evaluations, 0.0)
        return np.concatenate((residuals, penalties))

    def _norm_wrapper_residuals(self, var: np.ndarray) -> float:
        """Compute norm of residues vector from an array of variable values."""
        return float(np.linalg.norm(self._wrapper_residuals(var)))

    def _generate_opti_sol(
        self, var: np.ndarray, success: bool, message: str
    ) -> OptiSol:
        """Store the optimization results."""
        fun = self._wrapper_residuals(var)
        opti_sol: OptiSol = {
            "var": np.asarray(var, dtype=float),
            "fun": fun,
            "objective": float(np.linalg.norm(fun)),
            "n_evaluations": self.n_evaluations,
            "success": bool(success),
            "message": str(message),
        }
        return opti_sol

    def _finalize(self, opti_sol: OptiSol, *complementary_info: str) -> None:
        """End the optimization process."""
        self._output_some_info(opti_sol, *complementary_info)

    def _output_some_info(
        self, opti_sol: OptiSol, *complementary_info: str
    ) -> None:
        """Show the most useful data from optimization."""
        info_string = "Variables results:\n"
        for name, value in zip(self.variable_names, opti_sol["var"]):
            info_string += f"{name:>10} | {value:+.14e}\n"
        info_string += (
            f"Norm: {opti_sol['objective']:.3e} after "
            f"{opti_sol['n_evaluations']} evaluations\n"
        )
        for m in complementary_info:
            info_string += m + "\n"
        logging.debug(info_string)
