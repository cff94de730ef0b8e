"""Average the outcome probabilities over randomly drawn membranes.

A universal measurement averages over all the membranes sharing a simplex. We
sample piecewise constant membranes: the number of cells is uniform in
``1, ..., max_cells``, the cells have equal widths and their masses are
i.i.d. positive weights, normalized. By symmetry every cell has an average
mass of ``1 / k``, so the average probability of ``yes`` is the Born one,
:math:`(1 + e) / 2`.

"""

import logging
from typing import Literal

import numpy as np
import pandas as pd

from cogniq.bloch.membranes import PiecewiseConstantMembrane, check_coordinate
from cogniq.constants import DEFAULT_SEED
from cogniq.core.errors import ContractViolation
from cogniq.core.random_models import SeedT, as_generator, spawn_generators

WEIGHT_DISTRIBUTION_T = Literal["exponential", "uniform"]
#: Number of membranes drawn with the same generator.
CHUNK_SIZE = 10_000


def _draw_weights(
    rng: np.random.Generator,
    size: tuple[int, int],
    weight_distribution: WEIGHT_DISTRIBUTION_T,
) -> np.ndarray:
    """Draw normalized cell masses, one membrane per row."""
    match weight_distribution:
        case "exponential":
            weights = rng.exponential(size=size)
        case "uniform":
            weights = rng.random(size) + np.finfo(float).tiny
        case _:
            raise ContractViolation(f"Unknown {weight_distribution = }")
    return weights / weights.sum(axis=1, keepdims=True)


def random_piecewise_membrane(
    seed: SeedT,
    max_cells: int = 20,
    weight_distribution: WEIGHT_DISTRIBUTION_T = "exponential",
) -> PiecewiseConstantMembrane:
    """Draw one piecewise constant membrane with equal-width cells."""
    rng = as_generator(seed)
    n_cells = int(rng.integers(1, max_cells + 1))
    weights = _draw_weights(rng, (1, n_cells), weight_distribution)[0]
    return PiecewiseConstantMembrane(
        np.linspace(-1.0, 1.0, n_cells + 1), weights
    )


def _chunk_sum(
    e: float,
    size: int,
    rng: np.random.Generator,
    max_cells: int,
    weight_distribution: WEIGHT_DISTRIBUTION_T,
) -> float:
    """Sum the probabilities of ``yes`` over ``size`` random membranes."""
    n_cells = rng.integers(1, max_cells + 1, size=size)
    total = 0.0
    for k in range(1, max_cells + 1):
        count = int(np.count_nonzero(n_cells == k))
        if count == 0:
            continue
        weights = _draw_weights(rng, (count, k), weight_distribution)
        position = 0.5 * (e + 1.0) * k
        cell = min(int(np.floor(position)), k - 1)
        fraction = position - cell
        cdf = weights[:, :cell].sum(axis=1) + fraction * weights[:, cell]
        total += float(cdf.sum())
    return total


def universal_measurement_probability(
    e: float,
    samples: int = 100_000,
    seed: int = DEFAULT_SEED,
    max_cells: int = 20,
    weight_distribution: WEIGHT_DISTRIBUTION_T = "exponential",
) -> float:
    """Average the probability of ``yes`` over ``samples`` random membranes.

    Membranes are drawn chunk by chunk, each chunk with its own generator
    spawned from ``seed``, so the result only depends on ``seed`` and
    ``samples``.

    Parameters
    ----------
    e : float
        Coordinate of the particle on the segment.
    samples : int, optional
        Number of random membranes.
    seed : int, optional
        Root seed.
    max_cells : int, optional
        Maximum number of cells of a membrane.
    weight_distribution : {"exponential", "uniform"}, optional
        Distribution of the cell masses before normalisation.

    Returns
    -------
    float
        The average; exactly 1 at ``e = 1`` and 0 at ``e = -1``.

    """
    e = check_coordinate(e)
    if samples < 1 or max_cells < 1:
        raise ContractViolation(f"Need {samples = } >= 1, {max_cells = } >= 1")
    if e >= 1.0:
        return 1.0
    if e <= -1.0:
        return 0.0

    n_chunks = -(-samples // CHUNK_SIZE)
    total = 0.0
    for i, rng in enumerate(spawn_generators(seed, n_chunks)):
        size = min(CHUNK_SIZE, samples - i * CHUNK_SIZE)
        total += _chunk_sum(e, size, rng, max_cells, weight_distribution)
    return total / samples


def universal_sweep(
    grid: np.ndarray | None = None,
    samples: int = 100_000,
    seed: int = DEFAULT_SEED,
    grid_points: int = 11,
    max_cells: int = 20,
    weight_distribution: WEIGHT_DISTRIBUTION_T = "exponential",
) -> pd.DataFrame:
    """Compare the universal average with the Born rule on a grid.

    Every grid point uses the same ``seed``.

    Returns
    -------
    pandas.DataFrame
        Columns ``e``, ``average``, ``born``, ``difference``.

    """
    if grid is None:
        grid = np.linspace(-1.0, 1.0, grid_points)
    rows = []
    for e in grid:
        average = universal_measurement_probability(
            float(e), samples, seed, max_cells, weight_distribution
        )
        born = 0.5 * (1.0 + float(e))
        rows.append((float(e), average, born, average - born))
    sweep = pd.DataFrame(rows, columns=["e", "average", "born", "difference"])
    logging.info(
        f"Universal measurement: max |difference| = "
        f"{sweep['difference'].abs().max():.2e} with {samples} membranes"
    )
    return sweep
