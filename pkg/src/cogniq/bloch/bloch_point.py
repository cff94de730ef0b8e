"""Map states to points of the generalized Bloch sphere, and back.

With :math:`\\rho` a density matrix of dimension ``n``, its point has
coordinates :math:`x_i = \\sqrt{n/(2(n-1))}\\,\\mathrm{Tr}(\\rho\\Lambda_i)`.
Pure states are unit vectors, the maximally mixed state is the origin. For
``n >= 3``, only a convex portion of the unit ball corresponds to states.

"""

import logging
from dataclasses import dataclass

import numpy as np

from cogniq.bloch.generators import GeneratorBasis
from cogniq.constants import STATE_BODY_TOL
from cogniq.core.errors import ContractViolation, NotAState
from cogniq.core.states import AnyState, DensityMatrix, as_density_array


@dataclass(frozen=True, eq=False)
class BlochPoint:
    """Coordinates of a point in the Bloch representation of dimension ``n``.

    Parameters
    ----------
    coords : numpy.ndarray
        Real vector of length :math:`n^2 - 1`.
    n : int
        Dimension of the Hilbert space.

    """

    coords: np.ndarray
    n: int

    def __post_init__(self) -> None:
        """Check the number of coordinates."""
        coords = np.array(self.coords, dtype=float)
        if coords.shape != (self.n**2 - 1,):
            raise ContractViolation(
                f"Expected {self.n**2 - 1} coordinates, got {coords.shape}"
            )
        if not np.all(np.isfinite(coords)):
            raise ContractViolation(f"Non-finite Bloch {coords = }")
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    @property
    def norm(self) -> float:
        """Give the distance to the center of the sphere."""
        return float(np.linalg.norm(self.coords))

    def dot(self, other: "BlochPoint") -> float:
        """Give the scalar product with ``other``."""
        return float(self.coords @ other.coords)


def bloch_coordinates(rho: np.ndarray, basis: GeneratorBasis) -> np.ndarray:
    """Give the coordinates of a density matrix given as a plain array."""
    if rho.shape != (basis.dim, basis.dim):
        raise ContractViolation(
            f"Matrix of shape {rho.shape} does not match basis of dim "
            f"{basis.dim}"
        )
    traces = np.einsum("kij,ji->k", basis.generators, rho).real
    return basis.scale * traces


def state_to_bloch(state: AnyState, basis: GeneratorBasis) -> BlochPoint:
    """Give the Bloch point of ``state``.

    Raises
    ------
    ContractViolation
        If the dimension of the state differs from the one of the basis.

    """
    coords = bloch_coordinates(as_density_array(state), basis)
    return BlochPoint(coords, basis.dim)


def bloch_to_density(
    point: BlochPoint, basis: GeneratorBasis
) -> DensityMatrix:
    """Rebuild the density matrix of a Bloch point.

    :math:`\\rho = \\mathbb{1}/n + \\frac{1}{2}\\sqrt{2(n-1)/n}\\,\\sum_i x_i
    \\Lambda_i`.

    Raises
    ------
    NotAState
        If the rebuilt matrix has an eigenvalue lower than minus
        :data:`.STATE_BODY_TOL`, i.e. if the point is outside of the convex
        body of states.

    """
    n = basis.dim
    if point.n != n:
        raise ContractViolation(f"Point of dim {point.n} but basis of {n = }")
    rho = np.eye(n, dtype=np.complex128) / n + (
        0.5
        / basis.scale
        * np.einsum("k,kij->ij", point.coords, basis.generators)
    )
    rho = 0.5 * (rho + rho.conj().T)

    eigenvalues, eigenvectors = np.linalg.eigh(rho)
    if eigenvalues.min() < -STATE_BODY_TOL:
        raise NotAState(
            f"Bloch point of norm {point.norm:.6f} gives a matrix with "
            f"eigenvalue {eigenvalues.min():.3e}"
        )
    if eigenvalues.min() < 0.0:
        logging.debug(
            f"Clamping eigenvalue {eigenvalues.min():.3e} of rebuilt state"
        )
        eigenvalues = np.clip(eigenvalues, 0.0, None)
        eigenvalues /= eigenvalues.sum()
        rho = (eigenvectors * eigenvalues) @ eigenvectors.conj().T
    return DensityMatrix(rho)
