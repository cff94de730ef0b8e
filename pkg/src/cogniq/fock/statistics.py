"""Compare Maxwell-Boltzmann and Bose-Einstein statistics of concepts.

``N`` identical concepts, e.g. the eleven animals of *Eleven Animals*, are
spread over ``M`` cells, e.g. two species. A configuration is the number of
concepts in every cell. Distinguishable entities give the Maxwell-Boltzmann
distribution, where every configuration weighs its multinomial coefficient;
indistinguishable ones give the Bose-Einstein distribution, uniform over the
configurations.

"""

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

import numpy as np
from scipy.special import comb, xlogy

from cogniq.core.errors import ContractViolation, TooLarge

#: Default maximum number of enumerated configurations.
MAX_CONFIGURATIONS = 1_000_000

CountsT = Sequence[int] | Mapping[tuple[int, ...] | str, int]


@dataclass(frozen=True, eq=False)
class OccupationDistributions:
    """Both distributions over the occupation configurations.

    Parameters
    ----------
    n_entities, n_cells : int
        ``N`` and ``M``.
    configurations : tuple[tuple[int, ...], ...]
        Every configuration, in decreasing lexicographic order.
    maxwell_boltzmann, bose_einstein : numpy.ndarray
        Probability of every configuration.
    counts : numpy.ndarray | None, optional
        Observed number of every configuration.
    log_likelihood_mb, log_likelihood_be : float | None, optional
        Log-likelihood of ``counts`` under both distributions.

    """

    n_entities: int
    n_cells: int
    configurations: tuple[tuple[int, ...], ...]
    maxwell_boltzmann: np.ndarray
    bose_einstein: np.ndarray
    counts: np.ndarray | None = None
    log_likelihood_mb: float | None = None
    log_likelihood_be: float | None = None

    def to_dict(self) -> dict[str, object]:
        """Convert to a JSON-serializable dictionary."""
        out: dict[str, object] = {
            "N": self.n_entities,
            "M": self.n_cells,
            "configurations": [
                ",".join(str(n) for n in config)
                for config in self.configurations
            ],
            "maxwell_boltzmann": self.maxwell_boltzmann.tolist(),
            "bose_einstein": self.bose_einstein.tolist(),
        }
        if self.counts is not None:
            out["counts"] = self.counts.tolist()
            out["log_likelihood_mb"] = self.log_likelihood_mb
            out["log_likelihood_be"] = self.log_likelihood_be
        return out


def number_of_configurations(n_entities: int, n_cells: int) -> int:
    """Give :math:`\\binom{N + M - 1}{M - 1}`, exactly."""
    return int(comb(n_entities + n_cells - 1, n_cells - 1, exact=True))


def occupation_configurations(
    n_entities: int, n_cells: int
) -> Iterator[tuple[int, ...]]:
    """Yield the ways to put ``n_entities`` in ``n_cells``.

    The first cell is filled first: ``(N, 0, ..., 0)`` comes first and
    ``(0, ..., 0, N)`` last.

    """
    if n_cells == 1:
        yield (n_entities,)
        return
    for first in range(n_entities, -1, -1):
        for rest in occupation_configurations(n_entities - first, n_cells - 1):
            yield (first, *rest)


def multinomial_coefficient(configuration: Sequence[int]) -> int:
    """Give the number of ways to reach ``configuration``, exactly."""
    coefficient = 1
    remaining = sum(configuration)
    for n in configuration:
        coefficient *= int(comb(remaining, n, exact=True))
        remaining -= n
    return coefficient


def _counts_vector(
    counts: CountsT, configurations: tuple[tuple[int, ...], ...]
) -> np.ndarray:
    """Align ``counts`` with ``configurations``."""
    if isinstance(counts, Mapping):
        index = {config: i for i, config in enumerate(configurations)}
        vector = np.zeros(len(configurations), dtype=np.int64)
        for key, count in counts.items():
            if isinstance(key, str):
                key = tuple(int(n) for n in key.split(","))
            if key not in index:
                raise ContractViolation(f"Unknown configuration {key}")
            vector[index[key]] = count
    else:
        vector = np.asarray(counts, dtype=np.int64)
        if vector.shape != (len(configurations),):
            raise ContractViolation(
                f"Need one count per configuration ({len(configurations)}), "
                f"got {vector.shape}"
            )
    if np.any(vector < 0):
        raise ContractViolation(f"Negative counts in {vector}")
    return vector


def identical_concepts_distributions(
    n_entities: int,
    n_cells: int,
    counts: CountsT | None = None,
    max_configurations: int = MAX_CONFIGURATIONS,
) -> OccupationDistributions:
    """Give the Maxwell-Boltzmann and Bose-Einstein distributions.

    Parameters
    ----------
    n_entities : int
        Number ``N >= 1`` of concepts.
    n_cells : int
        Number ``M >= 2`` of cells.
    counts : CountsT | None, optional
        Observed number of every configuration, either aligned with the
        configurations or keyed by them (tuples or strings like ``"2,0"``).
    max_configurations : int, optional
        Maximum size of the enumeration.

    Raises
    ------
    TooLarge
        If there are more than ``max_configurations`` configurations.

    """
    if n_entities < 1 or n_cells < 2:
        raise ContractViolation(
            f"Need N >= 1 and M >= 2, got N = {n_entities}, M = {n_cells}"
        )
    n_configurations = number_of_configurations(n_entities, n_cells)
    if n_configurations > max_configurations:
        logging.error(f"{n_configurations = } above {max_configurations = }")
        raise TooLarge(
            f"N = {n_entities}, M = {n_cells} give {n_configurations} "
            f"configurations, more than {max_configurations}"
        )

    configurations = tuple(occupation_configurations(n_entities, n_cells))
    total = n_cells**n_entities
    maxwell_boltzmann = np.array(
        [multinomial_coefficient(c) / total for c in configurations]
    )
    bose_einstein = np.full(n_configurations, 1.0 / n_configurations)

    if counts is None:
        return OccupationDistributions(
            n_entities,
            n_cells,
            configurations,
            maxwell_boltzmann,
            bose_einstein,
        )

    vector = _counts_vector(counts, configurations)
    log_mb = float(np.sum(xlogy(vector, maxwell_boltzmann)))
    log_be = float(np.sum(xlogy(vector, bose_einstein)))
    logging.info(
        f"Log-likelihoods of {int(vector.sum())} observations: "
        f"Maxwell-Boltzmann {log_mb:.4f}, Bose-Einstein {log_be:.4f}"
    )
    return OccupationDistributions(
        n_entities,
        n_cells,
        configurations,
        maxwell_boltzmann,
        bose_einstein,
        vector,
        log_mb,
        log_be,
    )
