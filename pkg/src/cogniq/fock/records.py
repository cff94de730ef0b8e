"""Define the data handled when combining concepts."""

import math
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Literal, Self

import numpy as np

from cogniq.core.errors import ContractViolation

COMBINATIONS_T = Literal["conjunction", "disjunction"]
COMBINATIONS = ("conjunction", "disjunction")
#: Keys of the four joint measurements, setting of the first then second.
SETTINGS = ("11", "12", "21", "22")
#: Tolerance on the normalisation of a joint outcome table.
JOINT_SUM_TOL = 1e-9


def _check_probability(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ContractViolation(f"{name} = {value} not in [0, 1]")
    return value


@dataclass(frozen=True)
class MembershipRecord:
    """Membership weights of one item for two concepts and a combination.

    Parameters
    ----------
    item : str
        Name of the item, e.g. ``"Mint"``.
    mu_a, mu_b : float
        Membership weights of the item for concepts ``A`` and ``B``.
    mu_comb : float
        Membership weight for the combination of ``A`` and ``B``.
    combination : {"conjunction", "disjunction"}
        How the two concepts are combined.

    """

    item: str
    mu_a: float
    mu_b: float
    mu_comb: float
    combination: COMBINATIONS_T

    def __post_init__(self) -> None:
        """Check that the weights are probabilities."""
        for name in ("mu_a", "mu_b", "mu_comb"):
            object.__setattr__(
                self, name, _check_probability(name, getattr(self, name))
            )
        if self.combination not in COMBINATIONS:
            raise ContractViolation(
                f"combination = {self.combination!r} not in {COMBINATIONS}"
            )

    @property
    def classical_value(self) -> float:
        """Give the weight of the combination for independent concepts."""
        return classical_combination(self.mu_a, self.mu_b, self.combination)


def classical_combination(
    mu_a: float, mu_b: float, combination: COMBINATIONS_T
) -> float:
    """Give the product-rule weight of the conjunction or disjunction."""
    if combination == "conjunction":
        return mu_a * mu_b
    return mu_a + mu_b - mu_a * mu_b


@dataclass(frozen=True)
class FockParameters:
    """Parameters of the two-sector model of a combination.

    Parameters
    ----------
    theta : float
        Interference phase, in :math:`[0, \\pi]`.
    m2 : float
        Weight of the second sector, where the combination follows logic.

    """

    theta: float
    m2: float

    def __post_init__(self) -> None:
        """Check the ranges."""
        if not 0.0 <= self.theta <= math.pi:
            raise ContractViolation(f"theta = {self.theta} not in [0, pi]")
        object.__setattr__(self, "m2", _check_probability("m2", self.m2))
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def n2(self) -> float:
        """Weight of the first sector, where the combination emerges."""
        return 1.0 - self.m2


@dataclass(frozen=True)
class JointCorrelationSet:
    """Expectation values of four joint measurements with outcomes +/-1.

    ``e_12`` is the correlation of the first setting of the first concept
    with the second setting of the second concept.

    """

    e_11: float
    e_12: float
    e_21: float
    e_22: float

    def __post_init__(self) -> None:
        """Check that every correlation lies in [-1, 1]."""
        for name in ("e_11", "e_12", "e_21", "e_22"):
            value = float(getattr(self, name))
            if not -1.0 <= value <= 1.0:
                raise ContractViolation(f"{name} = {value} not in [-1, 1]")
            object.__setattr__(self, name, value)

    @classmethod
    def from_tables(cls, tables: Mapping[str, np.ndarray]) -> Self:
        """Compute the four correlations from joint outcome tables.

        Parameters
        ----------
        tables : Mapping[str, numpy.ndarray]
            Keys ``"11"``, ``"12"``, ``"21"``, ``"22"``. Every table is
            :math:`2\\times 2`: rows are the outcomes ``+``, ``-`` of the
            first concept, columns those of the second.

        """
        missing = set(SETTINGS) - set(tables)
        if missing:
            raise ContractViolation(f"Missing joint tables {sorted(missing)}")
        return cls(
            *(joint_table_to_expectation(tables[key]) for key in SETTINGS)
        )

    def as_tuple(self) -> tuple[float, float, float, float]:
        """Give the correlations in the order 11, 12, 21, 22."""
        return self.e_11, self.e_12, self.e_21, self.e_22


def joint_table_to_expectation(table: np.ndarray) -> float:
    """Give :math:`p(++) + p(--) - p(+-) - p(-+)` of a joint table."""
    table = np.asarray(table, dtype=float)
    if table.shape != (2, 2):
        raise ContractViolation(f"Joint table must be 2x2, not {table.shape}")
    if np.any(table < 0.0) or abs(table.sum() - 1.0) > JOINT_SUM_TOL:
        raise ContractViolation(f"Joint table is not normalized:\n{table}")
    expectation = table[0, 0] + table[1, 1] - table[0, 1] - table[1, 0]
    return float(np.clip(expectation, -1.0, 1.0))
