"""Fit interval membranes to the data of a two-question experiment.

The model has seven parameters: the coordinates ``e_a``, ``e_b`` of the
particle, the cosine ``gamma`` between the axes and the breakable region
:math:`[a, b]` of each membrane. The six independent values of a
:class:`.SequentialTable` do not identify them: for every feasible ``gamma``
there is one exact solution, given by :func:`analytic_membrane_fit`. We
resolve this by preferring the widest membranes, i.e. the largest feasible
:math:`|\\gamma|`; for a table generated by the Born rule, this gives back the
uniform membranes.

"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from cogniq.bloch.membrane_model import (
    MembraneTwoQuestionModel,
    membrane_table_vector,
    predict_membrane_table,
)
from cogniq.bloch.membranes import IntervalMembrane
from cogniq.constants import CLAMP_TOL, DEFAULT_SEED, FIT_TIE_TOL
from cogniq.core.errors import InfeasibleTable
from cogniq.optimisation.design_space.variable import Variable
from cogniq.optimisation.multi_start import draw_starts, multi_start
from cogniq.order_effects.diagnostics import (
    conditional_probabilities,
    first_question_marginals,
)
from cogniq.order_effects.fit_report import FitReport
from cogniq.order_effects.hilbert_model import gram_is_feasible
from cogniq.order_effects.sequential_table import SequentialTable

PARAMETER_NAMES = (
    "e_a",
    "e_b",
    "gamma",
    "mid_a",
    "half_a",
    "mid_b",
    "half_b",
)  #:


@dataclass(frozen=True)
class MembraneFitSettings:
    """Settings of :func:`fit_membrane`.

    Parameters
    ----------
    restarts : int, optional
        Number of starting points, the analytic one included.
    tol : float, optional
        The fit is converged if its residual is lower than this.
    penalty_weight : float, optional
        Weight of the constraint violations appended to the residuals.
    min_half_width : float, optional
        Lower bound of the half-width of the breakable regions.
    max_iter : int, optional
        Maximum number of Nelder-Mead iterations per start.
    seed : int, optional
        Seed of the random starting points.
    gamma_grid_points : int, optional
        Number of values of :math:`|\\gamma|` scanned for the warm start.
    gamma_margin : float, optional
        The warm start uses ``(1 - gamma_margin)`` times the largest feasible
        ``gamma``, so that it is strictly feasible.

    """

    restarts: int = 32
    tol: float = 1e-4
    penalty_weight: float = 10.0
    min_half_width: float = 1e-6
    max_iter: int = 6000
    seed: int = DEFAULT_SEED
    gamma_grid_points: int = 200
    gamma_margin: float = 1e-3


@dataclass(frozen=True)
class _Targets:
    """Probabilities of the table that the membranes must reproduce."""

    first_yes: tuple[float, float]
    after_yes: tuple[float, float]
    after_no: tuple[float, float]

    @property
    def slopes(self) -> tuple[float, float]:
        """Give :math:`F(\\gamma) - F(-\\gamma)` of each membrane."""
        return (
            self.after_yes[0] - self.after_no[0],
            self.after_yes[1] - self.after_no[1],
        )


def _targets(table: SequentialTable) -> _Targets:
    """Read the marginals and the conditionals of ``table``.

    ``after_yes[0]`` is the probability of ``yes`` to ``A`` asked after a
    ``yes`` to ``B``, i.e. :math:`F_A(\\gamma)`.

    """
    a, b = table.questions
    marginals = first_question_marginals(table)
    conditionals = conditional_probabilities(table)
    ab, ba = conditionals[table.label_ab], conditionals[table.label_ba]
    return _Targets(
        first_yes=(marginals[table.label_ab], marginals[table.label_ba]),
        after_yes=(ba[f"{a}y|{b}y"], ab[f"{b}y|{a}y"]),
        after_no=(ba[f"{a}y|{b}n"], ab[f"{b}y|{a}n"]),
    )


def analytic_membrane_fit(
    table: SequentialTable, gamma: float
) -> MembraneTwoQuestionModel | None:
    """Give the interval membranes reproducing ``table`` exactly.

    For a membrane on :math:`[a, a + w]`, the two conditionals give
    :math:`w = 2\\gamma / (F(\\gamma) - F(-\\gamma))` and
    :math:`a = \\gamma - F(\\gamma)w`; the first-question marginal then gives
    the coordinate of the particle.

    Returns
    -------
    MembraneTwoQuestionModel | None
        The model, or None if the regions leave :math:`[-1, 1]` or if no
        particle has the required coordinates for this ``gamma``.

    """
    targets = _targets(table)
    membranes, coordinates = [], []
    for i in range(2):
        slope = targets.slopes[i]
        if slope * gamma <= 0.0:
            return None
        width = 2.0 * gamma / slope
        a = gamma - targets.after_yes[i] * width
        b = a + width
        if a < -1.0 - CLAMP_TOL or b > 1.0 + CLAMP_TOL:
            return None
        a, b = max(a, -1.0), min(b, 1.0)
        membranes.append(IntervalMembrane(a, b))
        coordinates.append(a + targets.first_yes[i] * (b - a))

    if not gram_is_feasible(*coordinates, gamma):
        return None
    return MembraneTwoQuestionModel(
        float(np.clip(coordinates[0], -1.0, 1.0)),
        float(np.clip(coordinates[1], -1.0, 1.0)),
        gamma,
        *membranes,
        questions=table.questions,
    )


def maximal_feasible_gamma(
    table: SequentialTable, grid_points: int = 200
) -> float | None:
    """Give the ``gamma`` of largest magnitude with an exact solution.

    Raises
    ------
    InfeasibleTable
        If the two questions have conditionals varying in opposite
        directions, which no pair of membranes can reproduce.

    """
    slope_a, slope_b = _targets(table).slopes
    if slope_a * slope_b < 0.0:
        raise InfeasibleTable(
            f"Conditionals of {table.questions} vary in opposite directions: "
            f"{slope_a = }, {slope_b = }"
        )
    sign = 1.0 if slope_a + slope_b >= 0.0 else -1.0
    grid = sign * np.linspace(1.0 / grid_points, 1.0, grid_points)
    feasible = [analytic_membrane_fit(table, g) is not None for g in grid]
    if not any(feasible):
        return None
    last = int(np.flatnonzero(feasible)[-1])
    if last == grid_points - 1:
        return float(grid[last])

    low, high = float(grid[last]), float(grid[last + 1])
    for _ in range(60):
        middle = 0.5 * (low + high)
        if analytic_membrane_fit(table, middle) is None:
            high = middle
        else:
            low = middle
    return low


def _interval_cdf(mid: float, half: float) -> Callable[[float], float]:
    """Give the cumulative mass of a membrane breaking in ``mid +- half``."""

    def cdf(e: float) -> float:
        return float(np.clip((e - mid + half) / (2.0 * half), 0.0, 1.0))

    return cdf


def _as_vector(model: MembraneTwoQuestionModel) -> np.ndarray:
    """Convert an interval model to the fit parameters."""
    m_a, m_b = model.membrane_a, model.membrane_b
    assert isinstance(m_a, IntervalMembrane)
    assert isinstance(m_b, IntervalMembrane)
    return np.array(
        [
            model.e_a,
            model.e_b,
            model.gamma,
            0.5 * (m_a.a + m_a.b),
            0.5 * (m_a.b - m_a.a),
            0.5 * (m_b.a + m_b.b),
            0.5 * (m_b.b - m_b.a),
        ]
    )


def _as_model(
    x: np.ndarray, questions: tuple[str, str]
) -> MembraneTwoQuestionModel:
    """Convert fit parameters to the closest valid model.

    The regions are clipped to :math:`[-1, 1]`, and the particle is moved
    towards the center of the sphere if needed.

    """
    e_a, e_b, gamma, mid_a, half_a, mid_b, half_b = (float(v) for v in x)
    gamma = float(np.clip(gamma, -1.0, 1.0))
    membranes = [
        IntervalMembrane(max(mid - half, -1.0), min(mid + half, 1.0))
        for mid, half in ((mid_a, half_a), (mid_b, half_b))
    ]
    e_a, e_b = float(np.clip(e_a, -1.0, 1.0)), float(np.clip(e_b, -1.0, 1.0))
    if not gram_is_feasible(e_a, e_b, gamma):
        low, high = 0.0, 1.0
        for _ in range(60):
            middle = 0.5 * (low + high)
            if gram_is_feasible(middle * e_a, middle * e_b, gamma):
                low = middle
            else:
                high = middle
        logging.debug(f"Scaling particle coordinates by {low} to fit sphere")
        e_a, e_b = low * e_a, low * e_b
    return MembraneTwoQuestionModel(
        e_a, e_b, gamma, *membranes, questions=questions
    )


def fit_membrane(
    table: SequentialTable, settings: MembraneFitSettings | None = None
) -> FitReport:
    """Fit interval membranes and geometry to the eight values of ``table``.

    Parameters
    ----------
    table : SequentialTable
        Target data.
    settings : MembraneFitSettings | None, optional
        Settings of the fit. Default ones if not given.

    Returns
    -------
    FitReport
        Parameters are named after the questions, e.g. ``e_C``, ``gamma``,
        ``a_C``, ``b_C``.

    Raises
    ------
    DegenerateMarginal
        If the answers to a first question are too unbalanced to compute
        conditionals.
    InfeasibleTable
        If no membranes can reproduce the directions of the conditionals.

    """
    if settings is None:
        settings = MembraneFitSettings()
    target = table.as_vector()
    gamma_max = maximal_feasible_gamma(table, settings.gamma_grid_points)

    first_starts = []
    if gamma_max is not None:
        warm = analytic_membrane_fit(
            table, (1.0 - settings.gamma_margin) * gamma_max
        ) or analytic_membrane_fit(table, gamma_max)
        if warm is not None:
            first_starts.append(_as_vector(warm))
    if not first_starts:
        logging.warning(
            f"No exact interval membranes for {table.questions}; starting "
            "from random points only."
        )

    def compute_residuals(x: np.ndarray) -> np.ndarray:
        cdf_a = _interval_cdf(x[3], x[4])
        cdf_b = _interval_cdf(x[5], x[6])
        return membrane_table_vector((x[0], x[1]), x[2], cdf_a, cdf_b) - target

    def compute_constraints(x: np.ndarray) -> np.ndarray:
        e_a, e_b, gamma = x[:3]
        gram = np.array(
            [[1.0, e_a, e_b], [e_a, 1.0, gamma], [e_b, gamma, 1.0]]
        )
        return np.array(
            [
                -1.0 - (x[3] - x[4]),
                x[3] + x[4] - 1.0,
                -1.0 - (x[5] - x[6]),
                x[5] + x[6] - 1.0,
                -np.linalg.eigvalsh(gram).min(),
            ]
        )

    variables = [
        Variable(name, (settings.min_half_width, 1.0), x_0=0.5)
        if name.startswith("half")
        else Variable(name, (-1.0, 1.0), x_0=0.0)
        for name in PARAMETER_NAMES
    ]
    starts = draw_starts(
        variables, settings.restarts, settings.seed, first_starts
    )
    result = multi_start(
        variables,
        compute_residuals,
        starts,
        opti_method="downhill_simplex_penalty",
        polish_method="least_squares_penalty",
        compute_constraints=compute_constraints,
        preference=lambda x: float(x[4] + x[6]),
        tie_tol=FIT_TIE_TOL,
        penalty_weight=settings.penalty_weight,
        optimisation_algorithm_kwargs={
            "method": "Nelder-Mead",
            "options": {
                "adaptive": True,
                "xatol": 1e-10,
                "fatol": 1e-12,
                "maxiter": settings.max_iter,
            },
        },
    )

    model = _as_model(result.best["var"], table.questions)
    predicted = predict_membrane_table(model)
    residual = FitReport.residual_between(predicted, table)
    converged = residual <= settings.tol

    a, b = table.questions
    m_a, m_b = model.membrane_a, model.membrane_b
    parameters = {
        f"e_{a}": model.e_a,
        f"e_{b}": model.e_b,
        "gamma": model.gamma,
        f"a_{a}": m_a.a,
        f"b_{a}": m_a.b,
        f"a_{b}": m_b.a,
        f"b_{b}": m_b.b,
    }
    logging.info(
        f"Membrane fit of {table.questions}: {residual = :.3e} (start "
        f"{result.best_index} of {settings.restarts})"
    )
    if not converged:
        logging.warning(
            f"Membrane fit did not reach {settings.tol = }: {residual = }"
        )
    return FitReport(
        parameters=parameters,
        residual=residual,
        predicted=predicted,
        iterations=result.n_evaluations,
        converged=converged,
        model=model,
    )
