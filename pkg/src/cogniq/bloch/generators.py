"""Define the generalized Gell-Mann basis of traceless Hermitian matrices.

For a dimension ``n``, the basis holds :math:`n^2 - 1` matrices
:math:`\\Lambda_i`, normalized so that
:math:`\\mathrm{Tr}(\\Lambda_i\\Lambda_j) = 2\\delta_{ij}`. They are ordered as
follows:

1. symmetric matrices, with 1 at ``[j, k]`` and ``[k, j]``, for ``j < k``;
2. antisymmetric matrices, with :math:`-i` at ``[j, k]`` and :math:`+i` at
   ``[k, j]``, for ``j < k``;
3. diagonal matrices, :math:`\\sqrt{2/(l(l+1))}\\,\\mathrm{diag}(1, \\ldots,
   1, -l, 0, \\ldots)` for ``l = 1, ..., n - 1``.

For ``n = 2`` this gives back the Pauli matrices in the usual x, y, z order.

"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from cogniq.core.errors import ContractViolation

#: Tolerance on :math:`\mathrm{Tr}(\Lambda_i\Lambda_j) = 2\delta_{ij}`.
ORTHOGONALITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    """The :math:`n^2 - 1` generators of :math:`SU(n)`.

    Parameters
    ----------
    dim : int
        Dimension ``n`` of the Hilbert space.
    generators : numpy.ndarray
        Array of shape ``(n**2 - 1, n, n)``.

    """

    dim: int
    generators: np.ndarray

    def __post_init__(self) -> None:
        """Check shape, hermiticity, tracelessness and orthogonality."""
        n = self.dim
        generators = np.array(self.generators, dtype=np.complex128)
        if generators.shape != (n**2 - 1, n, n):
            raise ContractViolation(
                f"Expected {n**2 - 1} generators of shape ({n}, {n}), got "
                f"{generators.shape = }"
            )
        if not np.allclose(
            generators, generators.conj().transpose(0, 2, 1), atol=1e-12
        ):
            raise ContractViolation("Generators must be Hermitian.")
        if np.max(np.abs(np.trace(generators, axis1=1, axis2=2))) > 1e-12:
            raise ContractViolation("Generators must be traceless.")
        gram = np.einsum("kij,lji->kl", generators, generators).real
        deviation = np.max(np.abs(gram - 2.0 * np.eye(n**2 - 1)))
        if deviation > ORTHOGONALITY_TOL:
            raise ContractViolation(
                f"Generators are not orthogonal: {deviation = }"
            )
        generators.flags.writeable = False
        object.__setattr__(self, "generators", generators)

    def __len__(self) -> int:
        """Give the number of generators."""
        return self.generators.shape[0]

    @property
    def scale(self) -> float:
        """Give the factor putting pure states on the unit sphere.

        A Bloch coordinate is :math:`\\sqrt{n/(2(n-1))}\\,\\mathrm{Tr}(\\rho
        \\Lambda_i)`.

        """
        return float(np.sqrt(self.dim / (2.0 * (self.dim - 1))))


def gell_mann_matrices(dim: int) -> np.ndarray:
    """Build the generalized Gell-Mann matrices, in the module order."""
    if dim < 2:
        raise ContractViolation(f"Dimension must be at least 2, got {dim}")
    symmetric, antisymmetric, diagonal = [], [], []
    for j, k in combinations(range(dim), 2):
        matrix = np.zeros((dim, dim), dtype=np.complex128)
        matrix[j, k] = matrix[k, j] = 1.0
        symmetric.append(matrix)

        matrix = np.zeros((dim, dim), dtype=np.complex128)
        matrix[j, k] = -1.0j
        matrix[k, j] = 1.0j
        antisymmetric.append(matrix)

    for l in range(1, dim):
        entries = np.zeros(dim, dtype=np.complex128)
        entries[:l] = 1.0
        entries[l] = -l
        diagonal.append(np.sqrt(2.0 / (l * (l + 1))) * np.diag(entries))
    return np.array(symmetric + antisymmetric + diagonal)


@lru_cache(maxsize=16)
def gell_mann_basis(dim: int) -> GeneratorBasis:
    """Give the (cached) generalized Gell-Mann basis of dimension ``dim``."""
    return GeneratorBasis(dim, gell_mann_matrices(dim))
