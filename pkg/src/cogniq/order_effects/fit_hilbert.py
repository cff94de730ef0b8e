"""Fit a two-dimensional projective model to a :class:`.SequentialTable`.

The model has six parameters: the polar and azimuthal angles of the state and
of the ``yes`` eigenvectors of the two questions. Every table it predicts
obeys :math:`q = 0` and :math:`q' = 0`, so tables violating them cannot be
fitted exactly; the residual then measures how far they are from the model
class.

"""

import logging
from dataclasses import dataclass

import numpy as np

from cogniq.constants import DEFAULT_SEED
from cogniq.optimisation.design_space.variable import Variable
from cogniq.optimisation.multi_start import draw_starts, multi_start
from cogniq.order_effects.fit_report import FitReport
from cogniq.order_effects.hilbert_model import (
    HilbertTwoQuestionModel,
    bloch_angles,
    predict_table,
    qubit_table_vector,
    unit_vector,
)
from cogniq.order_effects.sequential_table import SequentialTable

ANGLE_NAMES = (
    "theta_state",
    "phi_state",
    "theta_a",
    "phi_a",
    "theta_b",
    "phi_b",
)  #:


@dataclass(frozen=True)
class FitSettings:
    """Settings of :func:`fit_hilbert_2d`.

    Parameters
    ----------
    restarts : int, optional
        Number of starting points of the Nelder-Mead descent.
    xatol, fatol : float, optional
        Absolute tolerances on the angles and on the residual norm.
    max_iter : int, optional
        Maximum number of Nelder-Mead iterations per start.
    polish : bool, optional
        If every descent is refined with a least-squares algorithm.
    seed : int, optional
        Seed of the random starting points.

    """

    restarts: int = 32
    xatol: float = 1e-12
    fatol: float = 1e-12
    max_iter: int = 4000
    polish: bool = True
    seed: int = DEFAULT_SEED


def hilbert_variables() -> list[Variable]:
    """Give the six angles; they are not bounded as they wrap around."""
    variables = []
    for name in ANGLE_NAMES:
        upper = np.pi if name.startswith("theta") else 2.0 * np.pi
        variables.append(Variable(name, (0.0, upper), bounded=False))
    return variables


def wrap_angles(angles: np.ndarray) -> np.ndarray:
    """Bring every polar angle in [0, pi], every azimuth in [0, 2 pi)."""
    wrapped = []
    for i in range(0, 6, 2):
        theta, phi = bloch_angles(unit_vector(angles[i], angles[i + 1]))
        wrapped += [theta, phi % (2.0 * np.pi)]
    return np.array(wrapped)


def fit_hilbert_2d(
    table: SequentialTable, settings: FitSettings | None = None
) -> FitReport:
    """Fit a 2D rank-1 Hilbert model to the eight probabilities of ``table``.

    Parameters
    ----------
    table : SequentialTable
        Target data.
    settings : FitSettings | None, optional
        Settings of the multi-start optimisation. Default ones if not given.

    Returns
    -------
    FitReport
        Parameters are the six wrapped angles and the derived geometry
        ``e_a``, ``e_b`` (projections of the state Bloch vector on the axes)
        and ``gamma`` (cosine between the axes).

    """
    if settings is None:
        settings = FitSettings()
    target = table.as_vector()

    def compute_residuals(angles: np.ndarray) -> np.ndarray:
        return qubit_table_vector(angles) - target

    variables = hilbert_variables()
    starts = draw_starts(variables, settings.restarts, settings.seed)
    result = multi_start(
        variables,
        compute_residuals,
        starts,
        opti_method="downhill_simplex",
        polish_method="least_squares" if settings.polish else None,
        optimisation_algorithm_kwargs={
            "method": "Nelder-Mead",
            "options": {
                "adaptive": True,
                "xatol": settings.xatol,
                "fatol": settings.fatol,
                "maxiter": settings.max_iter,
            },
        },
    )

    angles = wrap_angles(result.best["var"])
    model = HilbertTwoQuestionModel.from_bloch_angles(angles, table.questions)
    predicted = predict_table(model)
    residual = FitReport.residual_between(predicted, table)

    r, m_a, m_b = (unit_vector(*angles[i : i + 2]) for i in (0, 2, 4))
    parameters = dict(zip(ANGLE_NAMES, (float(x) for x in angles)))
    parameters |= {
        "e_a": float(r @ m_a),
        "e_b": float(r @ m_b),
        "gamma": float(m_a @ m_b),
    }
    converged = result.best["success"]
    logging.info(
        f"2D Hilbert fit of {table.questions}: {residual = :.3e} (start "
        f"{result.best_index} of {settings.restarts})"
    )
    if not converged:
        logging.warning(
            f"2D Hilbert fit did not converge: {result.best['message']}"
        )
    return FitReport(
        parameters=parameters,
        residual=residual,
        predicted=predicted,
        iterations=result.n_evaluations,
        converged=converged,
        model=model,
    )
