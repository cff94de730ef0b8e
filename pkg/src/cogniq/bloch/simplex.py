"""Define measurement simplexes and the collapse driven by uniform membranes.

The ``n`` eigenprojectors of a non-degenerate measurement are mapped to the
vertices of a regular simplex inscribed in the Bloch sphere. Its centroid is
the origin, so its affine hull is the linear span of the vertices. When the
membrane is uniform, the probability of outcome ``k`` is the ``k``-th
barycentric coordinate of the orthogonal projection of the particle on this
hull; it is exactly the Born probability.

"""

import logging
from dataclasses import dataclass

import numpy as np

from cogniq.bloch.bloch_point import BlochPoint, bloch_coordinates
from cogniq.bloch.generators import GeneratorBasis
from cogniq.constants import SIMPLEX_TOL
from cogniq.core.errors import (
    ContractViolation,
    DegenerateFamily,
    InvalidGeometry,
)
from cogniq.core.projectors import SpectralFamily


@dataclass(frozen=True, eq=False)
class MeasurementSimplex:
    """The simplex of a non-degenerate measurement.

    Parameters
    ----------
    vertices : tuple[BlochPoint, ...]
        Images of the ``n`` eigenstates, in outcome order.
    n : int
        Dimension of the Hilbert space.

    """

    vertices: tuple[BlochPoint, ...]
    n: int

    def __post_init__(self) -> None:
        """Check the vertex geometry."""
        if len(self.vertices) != self.n:
            raise ContractViolation(
                f"A simplex of dim {self.n} needs {self.n} vertices, got "
                f"{len(self.vertices)}"
            )
        matrix = self.as_array()
        expected = np.full((self.n, self.n), -1.0 / (self.n - 1))
        np.fill_diagonal(expected, 1.0)
        deviation = np.max(np.abs(matrix @ matrix.T - expected))
        if deviation > SIMPLEX_TOL:
            raise ContractViolation(
                f"Vertices are not a regular simplex: {deviation = }"
            )
        rank = np.linalg.matrix_rank(matrix[1:] - matrix[0], tol=SIMPLEX_TOL)
        if rank != self.n - 1:
            raise ContractViolation("Vertices are not affinely independent.")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def as_array(self) -> np.ndarray:
        """Give the vertices as the rows of an array."""
        return np.array([vertex.coords for vertex in self.vertices])


def simplex_of(
    family: SpectralFamily, basis: GeneratorBasis
) -> MeasurementSimplex:
    """Give the simplex of a family of ``n`` rank-1 projectors.

    Raises
    ------
    DegenerateFamily
        If a projector has a rank different from 1.

    """
    if family.dim != basis.dim:
        raise ContractViolation(
            f"Family of dim {family.dim} but basis of dim {basis.dim}"
        )
    if not family.is_nondegenerate:
        raise DegenerateFamily(
            f"Simplex needs rank-1 projectors, got {family.ranks = }"
        )
    vertices = tuple(
        BlochPoint(bloch_coordinates(projector.matrix, basis), basis.dim)
        for projector in family
    )
    return MeasurementSimplex(vertices, basis.dim)


def collapse_probabilities_uniform(
    particle: BlochPoint, simplex: MeasurementSimplex
) -> np.ndarray:
    """Give the outcome probabilities for a uniform membrane.

    Parameters
    ----------
    particle : BlochPoint
        Point representing the state.
    simplex : MeasurementSimplex
        Simplex of the measurement.

    Returns
    -------
    numpy.ndarray
        Barycentric coordinates of the projection of ``particle`` on the
        affine hull of ``simplex``.

    Raises
    ------
    InvalidGeometry
        If the projection falls outside of the simplex by more than
        :data:`.SIMPLEX_TOL`. This does not happen with valid states.

    """
    if particle.n != simplex.n:
        raise ContractViolation(
            f"Particle of dim {particle.n}, simplex of dim {simplex.n}"
        )
    vertices = simplex.as_array()
    # Vertices sum to zero: barycentric coordinates are defined up to a
    # constant vector, and the minimal-norm solution is orthogonal to it.
    coefficients, *_ = np.linalg.lstsq(
        vertices.T, particle.coords, rcond=None
    )
    probabilities = coefficients - coefficients.mean() + 1.0 / simplex.n

    if probabilities.min() < -SIMPLEX_TOL:
        raise InvalidGeometry(
            f"Projection is outside the simplex: {probabilities = }"
        )
    if probabilities.min() < 0.0:
        logging.debug(f"Clamping barycentric coordinates {probabilities}")
        probabilities = np.clip(probabilities, 0.0, None)
        probabilities /= probabilities.sum()
    return probabilities
