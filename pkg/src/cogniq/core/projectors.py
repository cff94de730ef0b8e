"""Define orthogonal projectors and the spectral families they form.

A measurement context with ``n`` outcomes is a :class:`SpectralFamily`:
``n`` mutually orthogonal projectors summing to identity. The projector of a
two-outcome ``yes``/``no`` question is ``M``, and the one of the ``no`` answer
is :math:`\\mathbb{1}-M`.

"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import Self

import numpy as np

from cogniq.constants import FAMILY_TOL, PROJECTOR_TOL, RANK_TOL
from cogniq.core.errors import ContractViolation


@dataclass(frozen=True, eq=False)
class Projector:
    """An orthogonal projection operator.

    Parameters
    ----------
    matrix : numpy.ndarray
        Square complex matrix, idempotent and Hermitian.
    rank : int | None, optional
        Dimension of the projection subspace. If not provided, it is deduced
        from the trace.

    """

    matrix: np.ndarray
    rank: int | None = None

    def __post_init__(self) -> None:
        """Check idempotence, hermiticity and rank."""
        matrix = np.array(self.matrix, dtype=np.complex128, copy=True)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ContractViolation(
                f"Projector must be square, got {matrix.shape = }"
            )
        if np.max(np.abs(matrix - matrix.conj().T)) > PROJECTOR_TOL:
            raise ContractViolation("Projector is not Hermitian.")
        if np.max(np.abs(matrix @ matrix - matrix)) > PROJECTOR_TOL:
            raise ContractViolation("Projector is not idempotent.")

        trace = float(np.trace(matrix).real)
        rank = self.rank if self.rank is not None else round(trace)
        if abs(trace - rank) > RANK_TOL:
            raise ContractViolation(
                f"Projector trace {trace} does not match {rank = }"
            )
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "rank", rank)

    @classmethod
    def from_vectors(cls, vectors: Sequence[np.ndarray] | np.ndarray) -> Self:
        """Create the projector onto the span of ``vectors``.

        Parameters
        ----------
        vectors : Sequence[numpy.ndarray] | numpy.ndarray
            Linearly independent vectors. If an array is given, its columns
            are the vectors.

        """
        columns = np.asarray(vectors, dtype=np.complex128)
        if not isinstance(vectors, np.ndarray):
            columns = columns.T
        if columns.ndim == 1:
            columns = columns[:, np.newaxis]
        orthonormal, _ = np.linalg.qr(columns)
        return cls(orthonormal @ orthonormal.conj().T, rank=columns.shape[1])

    @property
    def dim(self) -> int:
        """Give the dimension of the Hilbert space."""
        return self.matrix.shape[0]

    def complement(self) -> "Projector":
        """Give :math:`\\mathbb{1} - M`."""
        assert self.rank is not None
        return Projector(
            np.eye(self.dim, dtype=np.complex128) - self.matrix,
            rank=self.dim - self.rank,
        )

    def __repr__(self) -> str:
        """Print dimension and rank."""
        return f"Projector(dim={self.dim}, rank={self.rank})"


def _default_labels(n_outcomes: int) -> tuple[str, ...]:
    """Give ``("yes", "no")`` for two outcomes, indexes otherwise."""
    if n_outcomes == 2:
        return ("yes", "no")
    return tuple(str(i) for i in range(n_outcomes))


@dataclass(frozen=True, eq=False)
class SpectralFamily:
    """Mutually orthogonal projectors summing to identity.

    Parameters
    ----------
    projectors : tuple[Projector, ...]
        One projector per outcome.
    outcome_labels : tuple[str, ...]
        Name of every outcome. Defaults to ``("yes", "no")`` for two
        outcomes, and to the outcome indexes otherwise.

    """

    projectors: tuple[Projector, ...]
    outcome_labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        """Check completeness and orthogonality."""
        projectors = tuple(self.projectors)
        if len(projectors) < 1:
            raise ContractViolation("A spectral family needs projectors.")
        dims = {projector.dim for projector in projectors}
        if len(dims) != 1:
            raise ContractViolation(f"Projectors have several {dims = }")
        dim = dims.pop()

        total = sum(projector.matrix for projector in projectors)
        if np.max(np.abs(total - np.eye(dim))) > FAMILY_TOL:
            raise ContractViolation("Projectors do not sum to identity.")
        for k, first in enumerate(projectors):
            for second in projectors[k + 1 :]:
                product = first.matrix @ second.matrix
                if np.max(np.abs(product)) > FAMILY_TOL:
                    raise ContractViolation("Projectors are not orthogonal.")

        labels = tuple(self.outcome_labels) or _default_labels(
            len(projectors)
        )
        if len(labels) != len(projectors):
            raise ContractViolation(
                f"{len(labels)} labels given for {len(projectors)} outcomes"
            )
        object.__setattr__(self, "projectors", projectors)
        object.__setattr__(self, "outcome_labels", labels)

    @classmethod
    def from_projector(
        cls, projector: Projector, labels: tuple[str, str] = ("yes", "no")
    ) -> Self:
        """Create the two-outcome family :math:`\\{M, \\mathbb{1}-M\\}`."""
        return cls((projector, projector.complement()), labels)

    @property
    def dim(self) -> int:
        """Give the dimension of the Hilbert space."""
        return self.projectors[0].dim

    @property
    def ranks(self) -> tuple[int, ...]:
        """Give the rank of every projector."""
        return tuple(int(projector.rank or 0) for projector in self.projectors)

    @property
    def is_nondegenerate(self) -> bool:
        """Tell if every projector has rank 1."""
        return all(rank == 1 for rank in self.ranks)

    def index_of(self, outcome: int | str) -> int:
        """Give the index of an outcome given by label or by index."""
        if isinstance(outcome, str):
            if outcome not in self.outcome_labels:
                raise ContractViolation(
                    f"{outcome = } not in {self.outcome_labels = }"
                )
            return self.outcome_labels.index(outcome)
        if not 0 <= outcome < len(self.projectors):
            raise ContractViolation(f"Outcome index {outcome} out of range")
        return outcome

    def __getitem__(self, outcome: int | str) -> Projector:
        """Give the projector associated with ``outcome``."""
        return self.projectors[self.index_of(outcome)]

    def __len__(self) -> int:
        """Give the number of outcomes."""
        return len(self.projectors)

    def __iter__(self) -> Iterator[Projector]:
        """Iterate over projectors."""
        return iter(self.projectors)

    def __repr__(self) -> str:
        """Print dimension and ranks."""
        return f"SpectralFamily(dim={self.dim}, ranks={self.ranks})"


def projector_from_vectors(
    vectors: Sequence[np.ndarray] | np.ndarray,
) -> Projector:
    """Give the projector onto the span of ``vectors``."""
    return Projector.from_vectors(vectors)
