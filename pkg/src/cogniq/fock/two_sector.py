"""Model the weight of a combination of concepts in a two-sector Fock space.

The combination is handled by two processes. In the first sector, the state
is the superposition :math:`(|A\\rangle + |B\\rangle)/\\sqrt{2}` of the two
concepts, so that the weight is the average of :math:`\\mu_A` and
:math:`\\mu_B` plus an interference term. By the Cauchy-Schwarz inequality
applied to the projector of the item, this term lies between
:math:`-\\sqrt{\\mu_A\\mu_B}` and :math:`\\sqrt{\\mu_A\\mu_B}`; it is written
:math:`\\sqrt{\\mu_A\\mu_B}\\cos\\theta`. In the second sector, the two
concepts are combined following logic, with the product rule. The weight of
the combination is

.. math::
    m^2 \\mu_\\mathrm{logic}
    + n^2 \\left(\\frac{\\mu_A + \\mu_B}{2}
    + \\sqrt{\\mu_A\\mu_B}\\cos\\theta\\right)

with :math:`m^2 + n^2 = 1`. This is the usual form of the two-sector model,
rebuilt from the two processes it describes.

"""

import logging
import math
from typing import NamedTuple

import numpy as np

from cogniq.constants import TIE_TOL
from cogniq.fock.records import (
    COMBINATIONS_T,
    FockParameters,
    MembershipRecord,
    classical_combination,
)

#: Maximum error on the reproduced weight.
SOLVE_TOL = 1e-9


class FockWeight(NamedTuple):
    """Weight of a combination, and if it had to be clamped into [0, 1]."""

    value: float
    out_of_range: bool


class Infeasible(NamedTuple):
    """No parameters reproduce the weight of the combination.

    Attributes
    ----------
    reason : str
        Human-readable explanation.
    envelope : tuple[float, float]
        Lowest and highest weights the model can reach for these marginals.

    """

    reason: str
    envelope: tuple[float, float]


def _emergence_bounds(mu_a: float, mu_b: float) -> tuple[float, float]:
    """Give the extreme weights of the first sector."""
    average = 0.5 * (mu_a + mu_b)
    amplitude = math.sqrt(mu_a * mu_b)
    return average - amplitude, average + amplitude


def fock_combination_weight(
    mu_a: float,
    mu_b: float,
    params: FockParameters,
    combination: COMBINATIONS_T,
) -> FockWeight:
    """Give the membership weight of the combination of two concepts.

    Parameters
    ----------
    mu_a, mu_b : float
        Membership weights of the item for both concepts.
    params : FockParameters
        Phase and sector weights.
    combination : {"conjunction", "disjunction"}
        Logic of the second sector.

    Returns
    -------
    FockWeight
        The weight, clamped into :math:`[0, 1]`, and a flag telling if the
        clamping changed it.

    """
    logic = classical_combination(mu_a, mu_b, combination)
    emergence = 0.5 * (mu_a + mu_b) + math.sqrt(mu_a * mu_b) * math.cos(
        params.theta
    )
    value = params.m2 * logic + params.n2 * emergence
    clamped = min(max(value, 0.0), 1.0)
    if clamped != value:
        logging.debug(f"Fock weight {value} clamped to [0, 1]")
    return FockWeight(clamped, clamped != value)


def _m2_interval(
    target: float, logic: float, low: float, high: float
) -> tuple[float, float]:
    """Give the values of ``m2`` for which ``target`` can be reached.

    At fixed ``m2`` the reachable weights span
    :math:`[m_2 L + (1 - m_2) e_-, m_2 L + (1 - m_2) e_+]`; both ends are
    affine in ``m2``, so the feasible ``m2`` form an interval.

    """
    m_min, m_max = 0.0, 1.0
    # Both constraints read offset + m2 * slope <= 0
    constraints = ((low - target, logic - low), (target - high, high - logic))
    for offset, slope in constraints:
        if abs(slope) <= TIE_TOL:
            if offset > TIE_TOL:
                return 1.0, 0.0
            continue
        bound = -offset / slope
        if slope > 0.0:
            m_max = min(m_max, bound)
        else:
            m_min = max(m_min, bound)
    return m_min, m_max


def solve_fock_parameters(
    record: MembershipRecord,
) -> FockParameters | Infeasible:
    """Find the parameters that reproduce the weight of the combination.

    Among all the solutions, the one with the highest logic weight ``m2`` is
    returned, i.e. the most classical explanation of the data.

    Returns
    -------
    FockParameters | Infeasible
        The parameters, or why there are none.

    """
    logic = record.classical_value
    low, high = _emergence_bounds(record.mu_a, record.mu_b)
    target = record.mu_comb
    envelope = (min(low, logic), max(high, logic))

    m_min, m_max = _m2_interval(target, logic, low, high)
    if m_min > m_max + TIE_TOL:
        logging.debug(
            f"{record.item}: {target = } out of the envelope {envelope}"
        )
        return Infeasible(
            f"mu_comb = {target} is not in the reachable interval "
            f"[{envelope[0]}, {envelope[1]}]",
            envelope,
        )

    m2 = float(np.clip(m_max, 0.0, 1.0))
    amplitude = math.sqrt(record.mu_a * record.mu_b)
    theta = 0.5 * math.pi
    if m2 < 1.0 and amplitude > 0.0:
        emergence = (target - m2 * logic) / (1.0 - m2)
        cosine = (emergence - 0.5 * (record.mu_a + record.mu_b)) / amplitude
        theta = math.acos(float(np.clip(cosine, -1.0, 1.0)))

    params = FockParameters(theta=theta, m2=m2)
    obtained = fock_combination_weight(
        record.mu_a, record.mu_b, params, record.combination
    ).value
    if abs(obtained - target) > SOLVE_TOL:
        logging.warning(
            f"{record.item}: solved weight {obtained} differs from {target}"
        )
    return params
