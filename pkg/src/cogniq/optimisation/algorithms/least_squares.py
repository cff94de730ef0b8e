"""Define :class:`LeastSquares`, a simple and fast optimization method."""

from typing import Any

import numpy as np
from scipy.optimize import least_squares

from cogniq.optimisation.algorithms.algorithm import OptiSol
from cogniq.optimisation.algorithms.downhill_simplex import DownhillSimplex


class LeastSquares(DownhillSimplex):
    """Plain least-squares method, efficient for small problems.

    We mostly use it to polish the solutions of :class:`.DownhillSimplex`.

    See also
    --------
    :class:`.LeastSquaresPenalty`

    """

    supports_constraints = False

    def optimize(self, x_0: np.ndarray | None = None) -> OptiSol:
        """Set up the optimization and solve the problem.

        Returns
        -------
        info : OptiSol
            Gives the solution, corresponding residuals, convergence flag.

        """
        x_0, lower, upper = self._format_variables(x_0)
        result = least_squares(
            fun=self._wrapper_residuals,
            x0=x_0,
            bounds=(lower, upper),
            **self.optimisation_algorithm_kwargs,
        )
        self.opti_sol = self._generate_opti_sol(
            result.x, result.success, result.message
        )
        complementary_info = ("Least-Squares algorithm", str(result.message))
        self._finalize(self.opti_sol, *complementary_info)
        return self.opti_sol

    @property
    def _default_kwargs(self) -> dict[str, Any]:
        """Create the ``kwargs`` for the optimisation."""
        kwargs = {
            "jac": "2-point",
            # 'dogbox' handles the bounds and small dense jacobians well
            "method": "dogbox",
            "ftol": 1e-12,
            "gtol": 1e-12,
            "xtol": 1e-12,
            "verbose": 0,
        }
        return kwargs


class LeastSquaresPenalty(LeastSquares):
    """A least-squares method, with a penalty function for constraints.

    Everything is inherited from :class:`.LeastSquares`.

    """

    supports_constraints = True
