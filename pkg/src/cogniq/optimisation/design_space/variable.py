"""Define :class:`Variable`, which stores an optimisation variable.

It keeps its name, bounds and initial value.

"""

import logging
from dataclasses import dataclass
from typing import Self

import numpy as np

from cogniq.core.errors import ContractViolation


@dataclass
class Variable:
    """A single variable of a parameter fit.

    Parameters
    ----------
    name : str
        Name of the parameter, e.g. ``"gamma"``.
    limits : tuple[float, float]
        Lower and upper bound for the variable.
    x_0 : float, optional
        Initial value. If not provided, the middle of ``limits``.
    bounded : bool, optional
        If ``limits`` must be enforced by the optimisation algorithm. When
        False, they only give the range where random starting points are
        drawn; this is what we want for angles, which wrap around.

    """

    name: str
    limits: tuple[float, float]
    x_0: float = np.nan
    bounded: bool = True

    @classmethod
    def from_floats(
        cls,
        name: str,
        x_min: float,
        x_max: float,
        x_0: float = np.nan,
        bounded: bool = True,
    ) -> Self:
        """Initialize object with ``x_min``, ``x_max`` instead of ``limits``.

        Parameters
        ----------
        name : str
            Name of the parameter.
        x_min : float
            Lower limit.
        x_max : float
            Upper limit.
        x_0: float, optional
            Initial value.
        bounded : bool, optional
            If the limits are enforced.

        Returns
        -------
        Self
            A Variable with limits = (x_min, x_max).

        """
        return cls(name, (x_min, x_max), x_0, bounded)

    def __post_init__(self) -> None:
        """Check limits, set a default initial value."""
        x_min, x_max = self.limits
        if not (np.isfinite(x_min) and np.isfinite(x_max)) or x_min > x_max:
            raise ContractViolation(
                f"Variable {self.name} has invalid limits {self.limits}."
            )
        if np.isnan(self.x_0):
            self.x_0 = 0.5 * (x_min + x_max)
        if self.bounded and not x_min <= self.x_0 <= x_max:
            logging.warning(
                f"Initial value of {self.name} {self.x_0} is outside of "
                f"{self.limits}. Clipping it."
            )
            self.x_0 = float(np.clip(self.x_0, x_min, x_max))

    @property
    def bounds(self) -> tuple[float, float]:
        """Give the bounds given to the optimisation algorithm."""
        if self.bounded:
            return self.limits
        return -np.inf, np.inf

    def draw(self, rng: np.random.Generator) -> float:
        """Draw a random starting value within the limits."""
        return float(rng.uniform(*self.limits))
