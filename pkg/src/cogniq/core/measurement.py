"""Born probabilities, Lüders updates and sequences of measurements.

All functions are pure: they never modify their inputs, and only depend on
them.

"""

import logging
from collections.abc import Sequence

import numpy as np

from cogniq.constants import CLAMP_TOL, PROBABILITY_EPS
from cogniq.core.errors import ContractViolation, ZeroProbabilityOutcome
from cogniq.core.projectors import Projector, SpectralFamily
from cogniq.core.states import AnyState, DensityMatrix, StateVector

#: One step of a sequence: a context and the index or label of its outcome.
Step = tuple[SpectralFamily, int | str]


def _check_dims(state: AnyState, *operators: Projector) -> None:
    """Raise a :class:`.ContractViolation` on dimension mismatch."""
    for operator in operators:
        if operator.dim != state.dim:
            raise ContractViolation(
                f"State of dim {state.dim} and operator of dim "
                f"{operator.dim} do not match."
            )


def clamp_probability(value: float, context: str = "") -> float:
    """Bring a numerically computed probability back into ``[0, 1]``.

    Excursions up to :data:`.CLAMP_TOL` are logged and clamped; larger ones
    reveal a bug and raise.

    """
    if 0.0 <= value <= 1.0:
        return value
    if value < -CLAMP_TOL or value > 1.0 + CLAMP_TOL:
        raise ContractViolation(
            f"Probability {value} out of [0, 1] in {context or 'computation'}"
        )
    clamped = min(max(value, 0.0), 1.0)
    logging.debug(f"Clamped probability {value} to {clamped} {context}")
    return clamped


def born_probability(state: AnyState, m: Projector) -> float:
    """Give :math:`\\langle A|M|A\\rangle`, or :math:`\\mathrm{Tr}(\\rho M)`.

    Parameters
    ----------
    state : StateVector | DensityMatrix
        State of the entity.
    m : Projector
        Projector of the outcome.

    Returns
    -------
    float
        Probability of the outcome, in ``[0, 1]``.

    """
    _check_dims(state, m)
    if isinstance(state, StateVector):
        amplitudes = state.amplitudes
        value = float(np.vdot(amplitudes, m.matrix @ amplitudes).real)
    else:
        value = float(np.trace(state.entries @ m.matrix).real)
    return clamp_probability(value, "born_probability")


def born_probabilities(state: AnyState, family: SpectralFamily) -> np.ndarray:
    """Give the probability of every outcome of ``family``."""
    return np.array([born_probability(state, m) for m in family])


def luders_update[S: (StateVector, DensityMatrix)](
    state: S, m: Projector
) -> S:
    """Give the state after the outcome associated with ``m`` was obtained.

    Pure states map to :math:`M|A\\rangle/\\sqrt{\\langle A|M|A\\rangle}`,
    density matrices to :math:`M\\rho M/\\mathrm{Tr}(\\rho M)`.

    Raises
    ------
    ZeroProbabilityOutcome
        If the outcome has a probability lower than :data:`.PROBABILITY_EPS`.

    """
    probability = born_probability(state, m)
    if probability <= PROBABILITY_EPS:
        raise ZeroProbabilityOutcome(
            f"Outcome has probability {probability}, cannot condition on it."
        )
    if isinstance(state, StateVector):
        projected = m.matrix @ state.amplitudes
        return StateVector(projected / np.linalg.norm(projected))

    projected = m.matrix @ state.entries @ m.matrix
    projected = 0.5 * (projected + projected.conj().T)
    return DensityMatrix(projected / np.trace(projected).real)


def sequential_probability(state: AnyState, steps: Sequence[Step]) -> float:
    """Give the probability of obtaining a sequence of outcomes.

    For steps :math:`M_1, M_2, \\ldots` it is
    :math:`\\langle H|M_1 M_2 \\cdots M_2 M_1|H\\rangle`. The unnormalized
    state is propagated, so that impossible intermediate outcomes simply give
    a zero probability.

    Parameters
    ----------
    state : StateVector | DensityMatrix
        Initial state.
    steps : Sequence[Step]
        Contexts in the order they are applied, with the obtained outcome.

    Returns
    -------
    float
        Joint probability of the sequence of outcomes.

    """
    if len(steps) == 0:
        raise ContractViolation("At least one measurement step is needed.")
    projectors = [family[outcome] for family, outcome in steps]
    _check_dims(state, *projectors)

    if isinstance(state, StateVector):
        vector = state.amplitudes
        for m in projectors:
            vector = m.matrix @ vector
        value = float(np.vdot(vector, vector).real)
    else:
        rho = state.entries
        for m in projectors:
            rho = m.matrix @ rho @ m.matrix
        value = float(np.trace(rho).real)
    return clamp_probability(value, "sequential_probability")


def commutator_frobenius_norm(a: Projector, b: Projector) -> float:
    """Give the Frobenius norm of :math:`AB - BA`."""
    if a.dim != b.dim:
        raise ContractViolation(
            f"Operators of dims {a.dim} and {b.dim} do not match."
        )
    commutator = a.matrix @ b.matrix - b.matrix @ a.matrix
    return float(np.linalg.norm(commutator, ord="fro"))
