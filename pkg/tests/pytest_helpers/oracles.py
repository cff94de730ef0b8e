"""Provide slow but obvious reference implementations.

They are written independently from :mod:`cogniq` so that the library can be
checked against them.

"""

import itertools
from collections.abc import Sequence

import numpy as np
from scipy.optimize import linprog


def naive_sequence_probability(
    rho: np.ndarray, projectors: Sequence[np.ndarray]
) -> float:
    """Condition the density matrix step by step, multiply probabilities.

    This is the textbook version: Born probability of every outcome, then
    Lüders update, with renormalisation at every step.

    """
    probability = 1.0
    for m in projectors:
        step = float(np.trace(rho @ m).real)
        if step <= 1e-15:
            return 0.0
        probability *= step
        rho = m @ rho @ m / step
    return probability


def outcome_tree(
    rho: np.ndarray, families: Sequence[Sequence[np.ndarray]]
) -> dict[tuple[int, ...], float]:
    """Give the probability of every branch of a sequence of measurements."""
    out = {}
    for branch in itertools.product(*(range(len(f)) for f in families)):
        projectors = [family[k] for family, k in zip(families, branch)]
        out[branch] = naive_sequence_probability(rho, projectors)
    return out


def kolmogorov_feasible(
    mu_a: float, mu_b: float, mu_comb: float, combination: str
) -> bool:
    """Search a probability on the four atoms of two events.

    The atoms are ``AB``, ``A not B``, ``not A B`` and ``not A not B``. The
    marginals are imposed, and the conjunction is ``p(AB)`` while the
    disjunction is ``1 - p(not A not B)``.

    """
    a_eq = [
        [1.0, 1.0, 1.0, 1.0],
        [1.0, 1.0, 0.0, 0.0],
        [1.0, 0.0, 1.0, 0.0],
    ]
    b_eq = [1.0, mu_a, mu_b]
    if combination == "conjunction":
        a_eq.append([1.0, 0.0, 0.0, 0.0])
        b_eq.append(mu_comb)
    else:
        a_eq.append([1.0, 1.0, 1.0, 0.0])
        b_eq.append(mu_comb)
    result = linprog(
        c=np.zeros(4),
        A_eq=np.array(a_eq),
        b_eq=np.array(b_eq),
        bounds=[(0.0, 1.0)] * 4,
        method="highs",
    )
    return result.status == 0


def classical_grid_triples(
    combination: str, denominator: int = 20
) -> set[tuple[int, int, int]]:
    """Enumerate the classical weights on a grid of step ``1/denominator``.

    Every probability on the four atoms whose values are multiples of
    ``1/denominator`` is listed. Weights are given as numerators
    ``(mu_a, mu_b, mu_comb)``. On such a grid the atoms are determined by the
    three weights, so a triple is classical if and only if it is listed.

    """
    reachable = set()
    n = denominator
    for ab, a_not_b, not_a_b in itertools.product(range(n + 1), repeat=3):
        not_a_not_b = n - ab - a_not_b - not_a_b
        if not_a_not_b < 0:
            continue
        comb = ab if combination == "conjunction" else n - not_a_not_b
        reachable.add((ab + a_not_b, ab + not_a_b, comb))
    return reachable
