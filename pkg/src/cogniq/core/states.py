"""Define the states of a conceptual entity.

A pure state is a :class:`StateVector`, a mixed one a :class:`DensityMatrix`.
Both are immutable: the underlying arrays are copied and flagged read-only.

"""

from dataclasses import dataclass
from typing import Self

import numpy as np

from cogniq.constants import (
    EIGENVALUE_TOL,
    HERMITIAN_TOL,
    NORM_TOL,
    TRACE_TOL,
)
from cogniq.core.errors import ContractViolation


def _frozen(array: np.ndarray) -> np.ndarray:
    """Return a read-only complex copy of ``array``."""
    out = np.array(array, dtype=np.complex128, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class StateVector:
    """A unit vector :math:`|A\\rangle` of a finite-dimensional space.

    Parameters
    ----------
    amplitudes : numpy.ndarray
        Complex amplitudes. Their squared norm must be 1.

    """

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        """Check that the vector is a valid state."""
        amplitudes = _frozen(self.amplitudes)
        if amplitudes.ndim != 1:
            raise ContractViolation(
                f"A state vector must be 1D, got {amplitudes.shape = }"
            )
        if amplitudes.size < 2:
            raise ContractViolation(
                f"Dimension must be at least 2, got {amplitudes.size}"
            )
        norm_sq = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ContractViolation(
                f"State vector is not normalized: {norm_sq = }"
            )
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def normalized(cls, amplitudes: np.ndarray | list[complex]) -> Self:
        """Create a state from any non-zero vector, normalizing it first."""
        vector = np.asarray(amplitudes, dtype=np.complex128)
        norm = np.linalg.norm(vector)
        if norm == 0.0:
            raise ContractViolation("Cannot normalize the zero vector.")
        return cls(vector / norm)

    @classmethod
    def basis(cls, dim: int, index: int) -> Self:
        """Create the computational basis vector :math:`|index\\rangle`."""
        vector = np.zeros(dim, dtype=np.complex128)
        vector[index] = 1.0
        return cls(vector)

    @property
    def dim(self) -> int:
        """Give the dimension of the Hilbert space."""
        return self.amplitudes.size

    def to_density(self) -> "DensityMatrix":
        """Give the projector :math:`|A\\rangle\\langle A|`."""
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def __repr__(self) -> str:
        """Print the amplitudes."""
        return f"StateVector({np.array2string(self.amplitudes, precision=4)})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A mixed state: Hermitian, positive semidefinite, unit trace.

    Parameters
    ----------
    entries : numpy.ndarray
        Square complex matrix.

    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        """Check that the matrix is a valid density matrix."""
        entries = _frozen(self.entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ContractViolation(
                f"Density matrix must be square, got {entries.shape = }"
            )
        if entries.shape[0] < 2:
            raise ContractViolation("Dimension must be at least 2.")
        if np.max(np.abs(entries - entries.conj().T)) > HERMITIAN_TOL:
            raise ContractViolation("Density matrix is not Hermitian.")
        trace = np.trace(entries)
        if abs(trace - 1.0) > TRACE_TOL:
            raise ContractViolation(f"Density matrix has {trace = }")
        min_eigenvalue = float(np.linalg.eigvalsh(entries).min())
        if min_eigenvalue < -EIGENVALUE_TOL:
            raise ContractViolation(
                f"Density matrix is not positive: {min_eigenvalue = }"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def maximally_mixed(cls, dim: int) -> Self:
        """Give :math:`\\mathbb{1}/n`."""
        return cls(np.eye(dim, dtype=np.complex128) / dim)

    @property
    def dim(self) -> int:
        """Give the dimension of the Hilbert space."""
        return self.entries.shape[0]

    @property
    def purity(self) -> float:
        """Give :math:`\\mathrm{Tr}(\\rho^2)`."""
        return float(np.trace(self.entries @ self.entries).real)

    def __repr__(self) -> str:
        """Print the matrix."""
        return f"DensityMatrix(dim={self.dim}, purity={self.purity:.4f})"


AnyState = StateVector | DensityMatrix


def as_density_array(state: AnyState) -> np.ndarray:
    """Give the density matrix of any state as a plain array."""
    if isinstance(state, StateVector):
        return np.outer(state.amplitudes, state.amplitudes.conj())
    return state.entries


def states_equal_up_to_phase(
    first: StateVector, second: StateVector, tol: float = 1e-10
) -> bool:
    """Tell if two pure states are the same ray, i.e. equal up to a phase."""
    if first.dim != second.dim:
        return False
    overlap = abs(np.vdot(first.amplitudes, second.amplitudes))
    return bool(abs(overlap - 1.0) <= tol)
