"""Evaluate the Clauser-Horne-Shimony-Holt inequality on joint measurements.

Two settings are chosen for each of the two concepts of a combination; the
four joint measurements give the correlations :math:`E_{ij}`. Any classical
model satisfies :math:`|S| \\leq 2` with
:math:`S = E_{11} + E_{12} + E_{21} - E_{22}`, quantum entanglement reaches
:math:`2\\sqrt{2}`.

"""

import itertools
import logging
import math
from collections.abc import Mapping
from typing import NamedTuple

import numpy as np

from cogniq.constants import TIE_TOL
from cogniq.fock.records import SETTINGS, JointCorrelationSet

CLASSICAL_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
#: Settings of the singlet correlations maximizing :math:`|S|`.
OPTIMAL_ANGLES = (0.0, 0.5 * math.pi, 0.25 * math.pi, -0.25 * math.pi)


class CHSHResult(NamedTuple):
    """Value of the CHSH expression and what it violates."""

    s: float
    violated: bool
    tsirelson_excess: bool

    def to_dict(self) -> dict[str, float | bool]:
        """Convert to a JSON-serializable dictionary."""
        return self._asdict()


def chsh_value(correlations: JointCorrelationSet) -> CHSHResult:
    """Compute :math:`S` and compare it with the classical bound.

    ``tsirelson_excess`` flags correlations beyond the quantum maximum
    :math:`2\\sqrt{2}`, which no quantum model can produce either.

    """
    e_11, e_12, e_21, e_22 = correlations.as_tuple()
    s = e_11 + e_12 + e_21 - e_22
    result = CHSHResult(
        s=s,
        violated=abs(s) > CLASSICAL_BOUND + TIE_TOL,
        tsirelson_excess=abs(s) > TSIRELSON_BOUND + TIE_TOL,
    )
    logging.info(f"CHSH: {result}")
    return result


def correlations_from_tables(
    tables: Mapping[str, np.ndarray],
) -> JointCorrelationSet:
    """Compute the correlations of the four joint outcome tables."""
    return JointCorrelationSet.from_tables(tables)


def classical_chsh_bound() -> float:
    """Give the largest :math:`|S|` of deterministic local strategies.

    Every concept answers each of its two settings with a fixed ``+1`` or
    ``-1``; the 16 strategies are enumerated.

    """
    best = 0.0
    for a_1, a_2, b_1, b_2 in itertools.product((1, -1), repeat=4):
        s = a_1 * b_1 + a_1 * b_2 + a_2 * b_1 - a_2 * b_2
        best = max(best, abs(s))
    return float(best)


def singlet_tables(
    angles: tuple[float, float, float, float] = OPTIMAL_ANGLES,
) -> dict[str, np.ndarray]:
    """Give the joint tables of a singlet state measured at ``angles``.

    The correlation of settings at angles ``a`` and ``b`` is
    :math:`-\\cos(a - b)`; outcomes are balanced, so that
    :math:`p(++) = p(--) = (1 + E) / 4`.

    Parameters
    ----------
    angles : tuple[float, float, float, float], optional
        Angles of the two settings of the first concept, then of the second.

    """
    a_1, a_2, b_1, b_2 = angles
    tables = {}
    for key, (a, b) in zip(
        SETTINGS, ((a_1, b_1), (a_1, b_2), (a_2, b_1), (a_2, b_2))
    ):
        expectation = -math.cos(a - b)
        same, different = (1 + expectation) / 4, (1 - expectation) / 4
        tables[key] = np.array([[same, different], [different, same]])
    return tables


def singlet_correlations(
    angles: tuple[float, float, float, float] = OPTIMAL_ANGLES,
) -> JointCorrelationSet:
    """Give the correlations of :func:`singlet_tables`."""
    return JointCorrelationSet.from_tables(singlet_tables(angles))
