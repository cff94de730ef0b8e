"""Compare combinations of concepts with classical probability.

A record is overextended when the conjunction weighs more than one of the
concepts, underextended when the disjunction weighs less than one of them.
:func:`kolmogorov_representable` tells if a single classical probability
space can hold the three weights.

"""

import logging
from collections.abc import Sequence
from typing import Literal, NamedTuple

import pandas as pd

from cogniq.constants import TIE_TOL
from cogniq.core.errors import ContractViolation
from cogniq.fock.records import MembershipRecord
from cogniq.fock.two_sector import Infeasible, solve_fock_parameters

EXTENSIONS_T = Literal[
    "classical",
    "overextension",
    "double_overextension",
    "underextension",
    "double_underextension",
]


class KolmogorovCheck(NamedTuple):
    """Result of :func:`kolmogorov_representable`."""

    representable: bool
    violated: tuple[str, ...]


def classify_extension(record: MembershipRecord) -> EXTENSIONS_T:
    """Tell how the combination deviates from both concepts.

    Equalities within :data:`.TIE_TOL` are classical.

    """
    low = min(record.mu_a, record.mu_b)
    high = max(record.mu_a, record.mu_b)
    mu = record.mu_comb
    if record.combination == "conjunction":
        if mu > high + TIE_TOL:
            return "double_overextension"
        if mu > low + TIE_TOL:
            return "overextension"
        return "classical"
    if mu < low - TIE_TOL:
        return "double_underextension"
    if mu < high - TIE_TOL:
        return "underextension"
    return "classical"


def kolmogorov_bounds(record: MembershipRecord) -> dict[str, float]:
    """Give the lower and upper bounds of a classical combination.

    Keys are ``"lower"`` and ``"upper"``; they are the Fréchet bounds of the
    conjunction or of the disjunction.

    """
    mu_a, mu_b = record.mu_a, record.mu_b
    if record.combination == "conjunction":
        return {
            "lower": max(0.0, mu_a + mu_b - 1.0),
            "upper": min(mu_a, mu_b),
        }
    return {"lower": max(mu_a, mu_b), "upper": min(1.0, mu_a + mu_b)}


def kolmogorov_representable(record: MembershipRecord) -> KolmogorovCheck:
    """Check if the three weights fit in one classical probability space.

    Returns
    -------
    KolmogorovCheck
        Flag, and the human-readable violated bounds, e.g.
        ``"mu_comb <= min(mu_a, mu_b)"``.

    """
    bounds = kolmogorov_bounds(record)
    if record.combination == "conjunction":
        names = (
            "mu_comb >= max(0, mu_a + mu_b - 1)",
            "mu_comb <= min(mu_a, mu_b)",
        )
    else:
        names = (
            "mu_comb >= max(mu_a, mu_b)",
            "mu_comb <= min(1, mu_a + mu_b)",
        )

    violated = []
    if record.mu_comb < bounds["lower"] - TIE_TOL:
        violated.append(names[0])
    if record.mu_comb > bounds["upper"] + TIE_TOL:
        violated.append(names[1])
    return KolmogorovCheck(not violated, tuple(violated))


def mean_deviation(records: Sequence[MembershipRecord]) -> float:
    """Average the deviation of the combinations from the product rule.

    This is the mean of ``mu_comb`` minus the classical weight of the
    combination, over all ``records``.

    """
    if not records:
        raise ContractViolation("Need at least one record.")
    deviations = [r.mu_comb - r.classical_value for r in records]
    return sum(deviations) / len(deviations)


def fock_batch(records: Sequence[MembershipRecord]) -> pd.DataFrame:
    """Classify and model every record.

    Returns
    -------
    pandas.DataFrame
        One row per record, with columns ``item``, ``combination``, ``mu_a``,
        ``mu_b``, ``mu_comb``, ``classification``, ``representable``,
        ``violated``, ``feasible``, ``theta``, ``m2``, ``n2``.

    """
    rows = []
    for record in records:
        check = kolmogorov_representable(record)
        solution = solve_fock_parameters(record)
        feasible = not isinstance(solution, Infeasible)
        rows.append(
            {
                "item": record.item,
                "combination": record.combination,
                "mu_a": record.mu_a,
                "mu_b": record.mu_b,
                "mu_comb": record.mu_comb,
                "classification": classify_extension(record),
                "representable": check.representable,
                "violated": "; ".join(check.violated),
                "feasible": feasible,
                "theta": solution.theta if feasible else None,
                "m2": solution.m2 if feasible else None,
                "n2": solution.n2 if feasible else None,
            }
        )
    batch = pd.DataFrame(
        rows,
        columns=[
            "item",
            "combination",
            "mu_a",
            "mu_b",
            "mu_comb",
            "classification",
            "representable",
            "violated",
            "feasible",
            "theta",
            "m2",
            "n2",
        ],
    )
    n_classical = int(batch["representable"].sum())
    logging.info(
        f"{len(batch)} records, {len(batch) - n_classical} not classically "
        "representable"
    )
    return batch
