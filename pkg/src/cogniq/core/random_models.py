"""Generate random states and spectral families.

Randomness only comes from explicitly passed seeds. Independent streams for
parallel use are derived with :func:`spawn_generators`, which relies on the
counter-based :class:`numpy.random.SeedSequence` spawning.

"""

from collections.abc import Sequence

import numpy as np

from cogniq.core.errors import ContractViolation
from cogniq.core.projectors import Projector, SpectralFamily
from cogniq.core.states import StateVector

SeedT = int | np.random.Generator | np.random.SeedSequence


def as_generator(seed: SeedT) -> np.random.Generator:
    """Give a :class:`numpy.random.Generator` from any kind of seed."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_seeds(seed: int, n: int) -> list[np.random.SeedSequence]:
    """Create ``n`` independent child seeds derived from ``seed``."""
    if n < 0:
        raise ContractViolation(f"Cannot spawn {n = } seeds")
    return np.random.SeedSequence(seed).spawn(n)


def spawn_generators(seed: int, n: int) -> list[np.random.Generator]:
    """Create ``n`` independent generators derived from ``seed``.

    The ``i``-th generator only depends on ``seed`` and ``i``, so results
    computed chunk by chunk do not depend on how chunks are distributed.

    """
    return [np.random.default_rng(child) for child in spawn_seeds(seed, n)]


def random_unitary(dim: int, seed: SeedT) -> np.ndarray:
    """Draw a Haar-distributed unitary matrix.

    Complex Gaussian columns are orthonormalized with a QR decomposition, the
    phases of the diagonal of ``R`` being absorbed in ``Q``.

    """
    rng = as_generator(seed)
    gaussian = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal(
        (dim, dim)
    )
    q, r = np.linalg.qr(gaussian)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_state(dim: int, seed: SeedT) -> StateVector:
    """Draw a uniformly distributed pure state."""
    if dim < 2:
        raise ContractViolation(f"Dimension must be at least 2, got {dim}")
    rng = as_generator(seed)
    amplitudes = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector.normalized(amplitudes)


def random_spectral_family(
    dim: int,
    ranks: Sequence[int],
    seed: SeedT,
    labels: tuple[str, ...] = (),
) -> SpectralFamily:
    """Draw a random spectral family with projectors of given ranks.

    Parameters
    ----------
    dim : int
        Dimension of the Hilbert space.
    ranks : Sequence[int]
        Rank of every projector. They must be positive and sum to ``dim``.
    seed : int | numpy.random.Generator | numpy.random.SeedSequence
        Source of randomness.
    labels : tuple[str, ...], optional
        Outcome labels. Default ones are used if not provided.

    Returns
    -------
    SpectralFamily
        Projectors onto consecutive groups of columns of a Haar unitary.

    """
    if dim < 2:
        raise ContractViolation(f"Dimension must be at least 2, got {dim}")
    if any(rank < 1 for rank in ranks) or sum(ranks) != dim:
        raise ContractViolation(f"Invalid {ranks = } for {dim = }")
    unitary = random_unitary(dim, seed)
    projectors = []
    start = 0
    for rank in ranks:
        columns = unitary[:, start : start + rank]
        projectors.append(
            Projector(columns @ columns.conj().T, rank=int(rank))
        )
        start += rank
    return SpectralFamily(tuple(projectors), labels)


def random_ranks(dim: int, n_outcomes: int, seed: SeedT) -> tuple[int, ...]:
    """Draw positive ranks summing to ``dim``."""
    if not 1 <= n_outcomes <= dim:
        raise ContractViolation(f"Cannot split {dim = } in {n_outcomes}")
    rng = as_generator(seed)
    cuts = np.sort(rng.choice(np.arange(1, dim), n_outcomes - 1, False))
    edges = np.concatenate(([0], cuts, [dim]))
    return tuple(int(rank) for rank in np.diff(edges))
