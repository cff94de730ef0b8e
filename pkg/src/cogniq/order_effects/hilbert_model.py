"""Projective Hilbert-space models of two questions asked in both orders."""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Self

import numpy as np

from cogniq.constants import GRAM_TOL
from cogniq.core.errors import ContractViolation, InconsistentGeometry
from cogniq.core.measurement import sequential_probability
from cogniq.core.projectors import Projector, SpectralFamily
from cogniq.core.random_models import (
    SeedT,
    as_generator,
    random_spectral_family,
    random_state,
)
from cogniq.core.states import StateVector
from cogniq.order_effects.diagnostics import compute_q_prime
from cogniq.order_effects.sequential_table import (
    ANSWER_PAIRS,
    SequentialTable,
)


@dataclass(frozen=True, eq=False)
class HilbertTwoQuestionModel:
    """A state and the two-outcome spectral families of two questions.

    Parameters
    ----------
    state : StateVector
        Initial state :math:`|H\\rangle` of the entity.
    family_a : SpectralFamily
        ``yes``/``no`` family of question ``A``.
    family_b : SpectralFamily
        ``yes``/``no`` family of question ``B``.
    questions : tuple[str, str], optional
        Labels of the questions, used for the predicted table.

    """

    state: StateVector
    family_a: SpectralFamily
    family_b: SpectralFamily
    questions: tuple[str, str] = ("A", "B")

    def __post_init__(self) -> None:
        """Check dimensions and number of outcomes."""
        for name, family in (("A", self.family_a), ("B", self.family_b)):
            if len(family) != 2:
                raise ContractViolation(
                    f"Family of question {name} must have 2 outcomes."
                )
            if family.dim != self.state.dim:
                raise ContractViolation(
                    f"Family of question {name} has dim {family.dim} but "
                    f"state has dim {self.state.dim}."
                )

    @property
    def dim(self) -> int:
        """Give the dimension of the Hilbert space."""
        return self.state.dim

    @classmethod
    def from_bloch_angles(
        cls,
        angles: np.ndarray | list[float],
        questions: tuple[str, str] = ("A", "B"),
    ) -> Self:
        """Create a 2D rank-1 model from six spherical angles.

        Parameters
        ----------
        angles : numpy.ndarray | list[float]
            Polar and azimuthal angles of the state, then of the ``yes``
            eigenvector of ``A``, then of the one of ``B``.
        questions : tuple[str, str], optional
            Labels of the questions.

        """
        theta_s, phi_s, theta_a, phi_a, theta_b, phi_b = angles
        return cls(
            qubit_state(theta_s, phi_s),
            _qubit_family(theta_a, phi_a),
            _qubit_family(theta_b, phi_b),
            questions,
        )


def qubit_state(theta: float, phi: float) -> StateVector:
    """Give the pure qubit state with polar angles ``theta``, ``phi``."""
    return StateVector(
        np.array(
            [np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)],
            dtype=np.complex128,
        )
    )


def _qubit_family(theta: float, phi: float) -> SpectralFamily:
    """Give the rank-1 family whose ``yes`` vector has the given angles."""
    vector = qubit_state(theta, phi).amplitudes
    return SpectralFamily.from_projector(
        Projector(np.outer(vector, vector.conj()), rank=1)
    )


def bloch_angles(vector: np.ndarray) -> tuple[float, float]:
    """Give the polar angles of a unit 3-vector."""
    x, y, z = vector
    return float(np.arccos(np.clip(z, -1.0, 1.0))), float(np.arctan2(y, x))


def gram_is_feasible(e_a: float, e_b: float, gamma: float) -> bool:
    """Tell if a Bloch vector can have projections ``e_a``, ``e_b``.

    The axes of the questions are unit vectors with cosine ``gamma``. A
    vector ``r`` with :math:`|r| \\leq 1` exists iff the Gram matrix of
    ``{r, m_a, m_b}``, with a unit diagonal, is positive semidefinite.

    """
    if max(abs(e_a), abs(e_b), abs(gamma)) > 1.0 + GRAM_TOL:
        return False
    gram = np.array([[1.0, e_a, e_b], [e_a, 1.0, gamma], [e_b, gamma, 1.0]])
    return bool(np.linalg.eigvalsh(gram).min() >= -GRAM_TOL)


def bloch_geometry(
    e_a: float, e_b: float, gamma: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Build unit vectors ``r``, ``m_a``, ``m_b`` with given dot products.

    ``m_a`` is the z axis, ``m_b`` lies in the xz plane, and ``r`` is
    completed along y so that it is a unit vector (a pure state).

    Raises
    ------
    InconsistentGeometry
        If the Gram matrix is not positive semidefinite.

    """
    if not gram_is_feasible(e_a, e_b, gamma):
        raise InconsistentGeometry(
            f"No Bloch vector with {e_a = }, {e_b = } for {gamma = }"
        )
    gamma = float(np.clip(gamma, -1.0, 1.0))
    sin_gamma = np.sqrt(1.0 - gamma**2)
    m_a = np.array([0.0, 0.0, 1.0])
    m_b = np.array([sin_gamma, 0.0, gamma])
    r_x = 0.0 if sin_gamma < GRAM_TOL else (e_b - gamma * e_a) / sin_gamma
    r_y = np.sqrt(max(0.0, 1.0 - r_x**2 - e_a**2))
    return np.array([r_x, r_y, e_a]), m_a, m_b


def model_from_geometry(
    e_a: float,
    e_b: float,
    gamma: float,
    questions: tuple[str, str] = ("A", "B"),
) -> HilbertTwoQuestionModel:
    """Create the 2D model with prescribed Bloch projections.

    Parameters
    ----------
    e_a, e_b : float
        Projection of the state Bloch vector on the axis of each question.
    gamma : float
        Cosine of the angle between the two axes.
    questions : tuple[str, str], optional
        Labels of the questions.

    """
    r, m_a, m_b = bloch_geometry(e_a, e_b, gamma)
    angles = [*bloch_angles(r), *bloch_angles(m_a), *bloch_angles(m_b)]
    return HilbertTwoQuestionModel.from_bloch_angles(angles, questions)


def predict_table(model: HilbertTwoQuestionModel) -> SequentialTable:
    """Give the eight sequential probabilities predicted by ``model``."""
    values = []
    for first, second in (
        (model.family_a, model.family_b),
        (model.family_b, model.family_a),
    ):
        for pair in ANSWER_PAIRS:
            steps = [
                (first, 0 if pair[0] == "y" else 1),
                (second, 0 if pair[1] == "y" else 1),
            ]
            values.append(sequential_probability(model.state, steps))
    return SequentialTable.from_vector(
        model.questions, values, model_generated=True
    )


def qubit_table_vector(angles: np.ndarray) -> np.ndarray:
    """Give the eight probabilities of a 2D rank-1 model in closed form.

    This is the fast evaluation used by the fitter; it agrees with
    :func:`predict_table` applied to
    :meth:`HilbertTwoQuestionModel.from_bloch_angles`.

    """
    r, m_a, m_b = (
        unit_vector(angles[0], angles[1]),
        unit_vector(angles[2], angles[3]),
        unit_vector(angles[4], angles[5]),
    )
    born_yes = 0.5 * (1.0 + float(m_a @ m_b))
    born_no = 1.0 - born_yes
    out = np.empty(8)
    for offset, e_first in enumerate((float(r @ m_a), float(r @ m_b))):
        p_first = 0.5 * (1.0 + e_first)
        out[4 * offset : 4 * offset + 4] = (
            p_first * born_yes,
            p_first * born_no,
            (1.0 - p_first) * born_no,
            (1.0 - p_first) * born_yes,
        )
    return out


def unit_vector(theta: float, phi: float) -> np.ndarray:
    """Give the unit 3-vector with polar angles ``theta``, ``phi``."""
    return np.array(
        [
            np.sin(theta) * np.cos(phi),
            np.sin(theta) * np.sin(phi),
            np.cos(theta),
        ]
    )


class QQOperator(NamedTuple):
    """Operator :math:`Q` of the QQ-equality and its Frobenius norm."""

    matrix: np.ndarray
    frobenius_norm: float


def qq_operator(model: HilbertTwoQuestionModel) -> QQOperator:
    """Give the operator of the QQ-equality, identically zero.

    :math:`Q = M_BM_AM_B - M_AM_BM_A + \\bar{M}_B\\bar{M}_A\\bar{M}_B -
    \\bar{M}_A\\bar{M}_B\\bar{M}_A`.

    """
    m_a, m_a_bar = (m.matrix for m in model.family_a)
    m_b, m_b_bar = (m.matrix for m in model.family_b)
    matrix = (
        m_b @ m_a @ m_b
        - m_a @ m_b @ m_a
        + m_b_bar @ m_a_bar @ m_b_bar
        - m_a_bar @ m_b_bar @ m_a_bar
    )
    return QQOperator(matrix, float(np.linalg.norm(matrix, ord="fro")))


def random_model(
    dim: int,
    ranks_a: tuple[int, int],
    ranks_b: tuple[int, int],
    seed: SeedT,
    questions: tuple[str, str] = ("A", "B"),
) -> HilbertTwoQuestionModel:
    """Draw a random state and two random two-outcome families."""
    rng = as_generator(seed)
    return HilbertTwoQuestionModel(
        random_state(dim, rng),
        random_spectral_family(dim, ranks_a, rng),
        random_spectral_family(dim, ranks_b, rng),
        questions,
    )


def find_q_prime_counterexample(
    dim: int = 3,
    ranks_a: tuple[int, int] = (1, 2),
    ranks_b: tuple[int, int] = (2, 1),
    seed: SeedT = 0,
    attempts: int = 100,
    threshold: float = 1e-6,
) -> tuple[HilbertTwoQuestionModel, float]:
    """Search a model with :math:`|q'|` above ``threshold``.

    Such a model shows that :math:`q' = 0` is specific to two-dimensional
    rank-1 models, contrary to the QQ-equality.

    Returns
    -------
    tuple[HilbertTwoQuestionModel, float]
        The first model found, and its :math:`q'` value.

    Raises
    ------
    ValueError
        If no model was found in ``attempts`` draws.

    """
    rng = as_generator(seed)
    for attempt in range(attempts):
        model = random_model(dim, ranks_a, ranks_b, rng)
        q_prime = compute_q_prime(predict_table(model)).value
        if abs(q_prime) > threshold:
            logging.info(
                f"Found {q_prime = :.6f} in dim {dim} at {attempt = }"
            )
            return model, q_prime
    raise ValueError(f"No |q'| > {threshold} found in {attempts} attempts")


def hilbert_replicability(model: HilbertTwoQuestionModel) -> float:
    """Give the probability that ``A``, ``B``, ``A`` repeats the first answer.

    Response replicability requires 1. A projective model only reaches it
    when the two families commute on the relevant subspace, i.e. when there
    is no question order effect.

    """
    total = 0.0
    for answer in (0, 1):
        for intermediate in (0, 1):
            total += sequential_probability(
                model.state,
                [
                    (model.family_a, answer),
                    (model.family_b, intermediate),
                    (model.family_a, answer),
                ],
            )
    return total
