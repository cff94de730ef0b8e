"""Run an optimisation from several starting points and keep the best.

Starting points are drawn from per-start generators derived with
:func:`.spawn_generators`, so the result of a start only depends on the seed
and on its index. The best solution is the one with the lowest objective;
solutions within ``tie_tol`` of it are ranked by an optional ``preference``
(higher is better), then by start index.

"""

import logging
from collections.abc import Callable, Collection, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from cogniq.constants import FIT_TIE_TOL
from cogniq.core.random_models import spawn_generators
from cogniq.optimisation.algorithms.algorithm import (
    ComputeConstraintsT,
    ComputeResidualsT,
    OptiSol,
)
from cogniq.optimisation.algorithms.factory import (
    ALGORITHMS_T,
    optimisation_algorithm_factory,
)
from cogniq.optimisation.design_space.variable import Variable


@dataclass(frozen=True)
class MultiStartResult:
    """Best solution of a multi-start optimisation.

    Parameters
    ----------
    best : OptiSol
        Selected solution.
    best_index : int
        Index of the start that led to ``best``.
    solutions : list[OptiSol]
        Solutions of every start, in start order.

    """

    best: OptiSol
    best_index: int
    solutions: list[OptiSol]

    @property
    def n_evaluations(self) -> int:
        """Give the total number of residuals evaluations."""
        return sum(sol["n_evaluations"] for sol in self.solutions)


def draw_starts(
    variables: Collection[Variable],
    n_starts: int,
    seed: int,
    first_starts: Sequence[np.ndarray] = (),
) -> list[np.ndarray]:
    """Give ``n_starts`` starting points.

    The ``first_starts`` are used first; the other ones are drawn uniformly
    within the limits of the variables.

    """
    starts = [np.asarray(start, dtype=float) for start in first_starts]
    starts = starts[:n_starts]
    generators = spawn_generators(seed, n_starts)
    for rng in generators[len(starts) :]:
        starts.append(np.array([var.draw(rng) for var in variables]))
    return starts


def multi_start(
    variables: Collection[Variable],
    compute_residuals: ComputeResidualsT,
    starts: Sequence[np.ndarray],
    opti_method: ALGORITHMS_T = "downhill_simplex",
    polish_method: ALGORITHMS_T | None = "least_squares",
    compute_constraints: ComputeConstraintsT | None = None,
    preference: Callable[[np.ndarray], float] | None = None,
    tie_tol: float = FIT_TIE_TOL,
    **kwargs: Any,
) -> MultiStartResult:
    """Optimize from every start, optionally polish, select the best.

    Parameters
    ----------
    variables : Collection[Variable]
        Variables of the fit.
    compute_residuals : ComputeResidualsT
        Function giving the residuals for an array of variable values.
    starts : Sequence[numpy.ndarray]
        Starting points.
    opti_method : ALGORITHMS_T, optional
        Algorithm run from every start.
    polish_method : ALGORITHMS_T | None, optional
        Algorithm run from the solution of ``opti_method``. The polished
        solution is kept only if it is better.
    compute_constraints : ComputeConstraintsT | None, optional
        Constraints, for the ``_penalty`` algorithms.
    preference : Callable[[numpy.ndarray], float] | None, optional
        Tie-break between solutions with the same objective.
    tie_tol : float, optional
        Objectives closer than this are considered equal.
    kwargs :
        Passed to :func:`.optimisation_algorithm_factory`. The
        ``polish_kwargs`` entry, if given, replaces the
        ``optimisation_algorithm_kwargs`` for the polishing algorithm.

    """
    polish_kwargs = kwargs.pop("polish_kwargs", None)
    if compute_constraints is not None:
        kwargs["compute_constraints"] = compute_constraints

    solutions = []
    for i, start in enumerate(starts):
        algorithm = optimisation_algorithm_factory(
            opti_method, variables, compute_residuals, **kwargs
        )
        solution = algorithm.optimize(start)
        if polish_method is not None:
            polish_algo_kwargs = kwargs | {
                "optimisation_algorithm_kwargs": polish_kwargs
            }
            polisher = optimisation_algorithm_factory(
                polish_method,
                variables,
                compute_residuals,
                **polish_algo_kwargs,
            )
            polished = polisher.optimize(solution["var"])
            polished["n_evaluations"] += solution["n_evaluations"]
            if polished["objective"] <= solution["objective"]:
                solution = polished
            else:
                solution["n_evaluations"] = polished["n_evaluations"]
        logging.debug(f"Start {i}: objective = {solution['objective']:.3e}")
        solutions.append(solution)

    best_index = _select(solutions, preference, tie_tol)
    return MultiStartResult(solutions[best_index], best_index, solutions)


def _select(
    solutions: Sequence[OptiSol],
    preference: Callable[[np.ndarray], float] | None,
    tie_tol: float,
) -> int:
    """Give the index of the best solution."""
    objectives = np.array([sol["objective"] for sol in solutions])
    best_objective = objectives.min()
    candidates = np.flatnonzero(objectives <= best_objective + tie_tol)
    if preference is None or len(candidates) == 1:
        return int(candidates[0])
    scores = [preference(solutions[i]["var"]) for i in candidates]
    # argmax returns the first maximum, i.e. the lowest start index
    return int(candidates[int(np.argmax(scores))])
