"""Define a factory function to create :class:`.OptimisationAlgorithm`."""

import logging
from abc import ABCMeta
from collections.abc import Collection
from typing import Any, Literal

from cogniq.optimisation.algorithms.algorithm import (
    ComputeResidualsT,
    OptimisationAlgorithm,
)
from cogniq.optimisation.algorithms.downhill_simplex import DownhillSimplex
from cogniq.optimisation.algorithms.downhill_simplex_penalty import (
    DownhillSimplexPenalty,
)
from cogniq.optimisation.algorithms.least_squares import (
    LeastSquares,
    LeastSquaresPenalty,
)
from cogniq.optimisation.design_space.variable import Variable

ALGORITHM_SELECTOR: dict[str, ABCMeta] = {
    "least_squares": LeastSquares,
    "least_squares_penalty": LeastSquaresPenalty,
    "downhill_simplex": DownhillSimplex,
    "downhill_simplex_penalty": DownhillSimplexPenalty,
    "nelder_mead": DownhillSimplex,
    "nelder_mead_penalty": DownhillSimplexPenalty,
}  #:
ALGORITHMS_T = Literal[
    "least_squares",
    "least_squares_penalty",
    "downhill_simplex",
    "downhill_simplex_penalty",
    "nelder_mead",
    "nelder_mead_penalty",
]


def optimisation_algorithm_factory(
    opti_method: ALGORITHMS_T,
    variables: Collection[Variable],
    compute_residuals: ComputeResidualsT,
    **kwargs: Any,
) -> OptimisationAlgorithm:
    """Create the proper :class:`.OptimisationAlgorithm` instance.

    Parameters
    ----------
    opti_method : str
        Name of the desired optimisation algorithm.
    variables : Collection[Variable]
        Variables of the fit.
    compute_residuals : ComputeResidualsT
        Function giving the residuals for an array of variable values.
    kwargs :
        Other keyword arguments that will be passed to the
        :class:`.OptimisationAlgorithm`.

    Returns
    -------
    algorithm : OptimisationAlgorithm
        Instantiated optimisation algorithm.

    """
    if opti_method not in ALGORITHM_SELECTOR:
        logging.error(
            f"{opti_method = } not in implemented algorithms: "
            f"{list(ALGORITHM_SELECTOR)}"
        )
        raise KeyError(opti_method)
    algorithm_base_class = ALGORITHM_SELECTOR[opti_method]
    algorithm = algorithm_base_class(
        variables=variables, compute_residuals=compute_residuals, **kwargs
    )
    return algorithm
