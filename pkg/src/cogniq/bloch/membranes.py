"""Define the :math:`\\rho`-membranes of two-outcome measurements.

For ``n = 2`` the measurement simplex is a segment from the ``no`` vertex, at
coordinate -1, to the ``yes`` vertex, at +1. The particle at coordinate ``e``
falls orthogonally on the segment, which breaks at a random point drawn from
the density :math:`\\rho` of the membrane. The particle is pulled to ``yes``
iff the break point lies between the ``no`` vertex and itself, so that
:math:`P(\\mathrm{yes}) = F(e)` with :math:`F` the cumulative distribution of
:math:`\\rho`.

All the membranes implemented here have a piecewise linear :math:`F`.

"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from cogniq.constants import CLAMP_TOL
from cogniq.core.errors import ContractViolation
from cogniq.core.random_models import SeedT, as_generator

#: Tolerance on the total mass of a membrane.
MASS_TOL = 1e-12


class RhoMembrane(ABC):
    """A breakable membrane over the segment :math:`[-1, 1]`."""

    @abstractmethod
    def cdf(self, e: float | np.ndarray) -> float | np.ndarray:
        """Give the mass of the membrane on :math:`[-1, e]`."""

    @abstractmethod
    def sample_break_points(
        self, size: int, rng: np.random.Generator
    ) -> np.ndarray:
        """Draw ``size`` independent break points."""

    def to_dict(self) -> dict[str, object]:
        """Describe the membrane in a JSON-serializable way."""
        return {"variant": self.__class__.__name__}


class _PiecewiseLinearMembrane(RhoMembrane):
    """A membrane with a piecewise constant density.

    Subclasses define the ``knots``: abscissae from -1 to 1 and the
    cumulative mass at each of them.

    """

    @property
    @abstractmethod
    def knots(self) -> tuple[np.ndarray, np.ndarray]:
        """Give abscissae and cumulative masses of the density changes."""

    def cdf(self, e: float | np.ndarray) -> float | np.ndarray:
        """Interpolate the cumulative mass."""
        abscissae, masses = self.knots
        out = np.interp(e, abscissae, masses)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def sample_break_points(
        self, size: int, rng: np.random.Generator
    ) -> np.ndarray:
        """Draw break points by inversion of the cumulative mass."""
        abscissae, masses = self.knots
        return np.interp(rng.random(size), masses, abscissae)


@dataclass(frozen=True)
class UniformMembrane(_PiecewiseLinearMembrane):
    """The uniform membrane, which gives back the Born rule."""

    @property
    def knots(self) -> tuple[np.ndarray, np.ndarray]:
        """Give the two ends of the segment."""
        return np.array([-1.0, 1.0]), np.array([0.0, 1.0])


@dataclass(frozen=True)
class IntervalMembrane(_PiecewiseLinearMembrane):
    """A membrane that can only break in :math:`[a, b]`, uniformly.

    Parameters
    ----------
    a, b : float
        Ends of the breakable region, with :math:`-1 \\leq a < b \\leq 1`.

    """

    a: float
    b: float

    def __post_init__(self) -> None:
        """Check the ends of the region."""
        if not -1.0 <= self.a < self.b <= 1.0:
            raise ContractViolation(
                f"Need -1 <= a < b <= 1, got a = {self.a}, b = {self.b}"
            )

    @property
    def knots(self) -> tuple[np.ndarray, np.ndarray]:
        """Give the segment ends and the region ends."""
        return (
            np.array([-1.0, self.a, self.b, 1.0]),
            np.array([0.0, 0.0, 1.0, 1.0]),
        )

    def to_dict(self) -> dict[str, object]:
        """Describe the membrane in a JSON-serializable way."""
        return super().to_dict() | {"a": self.a, "b": self.b}


@dataclass(frozen=True, eq=False)
class PiecewiseConstantMembrane(_PiecewiseLinearMembrane):
    """A membrane with a density constant on every cell.

    Parameters
    ----------
    breaks : numpy.ndarray
        Strictly increasing cell edges, from -1 to 1.
    weights : numpy.ndarray
        Nonnegative mass of every cell, summing to 1.

    """

    breaks: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        """Check the cells."""
        breaks = np.array(self.breaks, dtype=float)
        weights = np.array(self.weights, dtype=float)
        if breaks.ndim != 1 or breaks.shape[0] != weights.shape[0] + 1:
            raise ContractViolation(
                f"Need one more break than weights, got {breaks.shape} and "
                f"{weights.shape}"
            )
        if breaks[0] != -1.0 or breaks[-1] != 1.0:
            raise ContractViolation(f"Breaks must go from -1 to 1: {breaks}")
        if np.any(np.diff(breaks) <= 0.0):
            raise ContractViolation(f"Breaks must increase: {breaks}")
        if np.any(weights < 0.0) or abs(weights.sum() - 1.0) > MASS_TOL:
            raise ContractViolation(f"Invalid cell {weights = }")
        masses = np.concatenate(([0.0], np.cumsum(weights)))
        masses[-1] = 1.0
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_masses", masses)

    @property
    def knots(self) -> tuple[np.ndarray, np.ndarray]:
        """Give the cell edges and their cumulative masses."""
        return self.breaks, self._masses

    def to_dict(self) -> dict[str, object]:
        """Describe the membrane in a JSON-serializable way."""
        return super().to_dict() | {
            "breaks": self.breaks.tolist(),
            "weights": self.weights.tolist(),
        }


@dataclass(frozen=True)
class CertainMembrane(RhoMembrane):
    """A degenerate membrane giving always the same outcome.

    It replaces the membrane of a question already answered, when the
    participant repeats the previous answer whatever the state.

    Parameters
    ----------
    outcome : bool
        True if the outcome is always ``yes``.

    """

    outcome: bool

    def cdf(self, e: float | np.ndarray) -> float | np.ndarray:
        """Give a constant 1 or 0."""
        value = 1.0 if self.outcome else 0.0
        if np.ndim(e) == 0:
            return value
        return np.full(np.shape(e), value)

    def sample_break_points(
        self, size: int, rng: np.random.Generator
    ) -> np.ndarray:
        """Put the break out of reach of the particle, on the proper side."""
        return np.full(size, -np.inf if self.outcome else np.inf)

    def to_dict(self) -> dict[str, object]:
        """Describe the membrane in a JSON-serializable way."""
        return super().to_dict() | {"outcome": self.outcome}


def check_coordinate(e: float) -> float:
    """Check that ``e`` is on the segment, clamp tiny excursions."""
    if not -1.0 - CLAMP_TOL <= e <= 1.0 + CLAMP_TOL:
        raise ContractViolation(f"Coordinate {e = } not in [-1, 1]")
    if abs(e) > 1.0:
        logging.debug(f"Clamping coordinate {e} to [-1, 1]")
    return float(np.clip(e, -1.0, 1.0))


def membrane_cdf(membrane: RhoMembrane, e: float) -> float:
    """Give the mass of ``membrane`` on :math:`[-1, e]`.

    Raises
    ------
    ContractViolation
        If ``e`` is not in :math:`[-1, 1]`.

    """
    return float(membrane.cdf(check_coordinate(e)))


def collapse_probabilities_membrane(
    e: float, membrane: RhoMembrane
) -> tuple[float, float]:
    """Give the probabilities of ``yes`` and ``no`` at coordinate ``e``."""
    p_yes = membrane_cdf(membrane, e)
    return p_yes, 1.0 - p_yes


def sample_break_points(
    membrane: RhoMembrane, size: int, seed: SeedT
) -> np.ndarray:
    """Draw ``size`` break points of ``membrane``."""
    if size < 0:
        raise ContractViolation(f"Cannot draw {size = } points")
    return membrane.sample_break_points(size, as_generator(seed))


class Collapse(NamedTuple):
    """Outcome of a measurement and coordinate of the particle after it."""

    outcome: str
    coordinate: float


def sample_collapse(e: float, membrane: RhoMembrane, seed: SeedT) -> Collapse:
    """Break the membrane once and give where the particle goes.

    The outcome is ``"yes"`` iff the break point is lower than or equal to
    ``e``; the particle then sits on the corresponding vertex, +1 or -1.

    """
    e = check_coordinate(e)
    break_point = sample_break_points(membrane, 1, seed)[0]
    if break_point <= e:
        return Collapse("yes", 1.0)
    return Collapse("no", -1.0)
