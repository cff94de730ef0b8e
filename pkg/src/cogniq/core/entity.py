"""Define :class:`ConceptualEntity`, the object of cognitive measurements.

A conceptual entity carries a state, independent of the participant, and a
set of contexts (measurements) that can change it. The transition probability
from a state to an outcome of a context is given by the Born rule; the state
after the outcome by the Lüders postulate.

"""

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Self

from cogniq.core.errors import ContractViolation
from cogniq.core.measurement import born_probability, luders_update
from cogniq.core.projectors import SpectralFamily
from cogniq.core.states import AnyState


@dataclass(frozen=True, eq=False)
class ConceptualEntity:
    """A concept or situation, in a given state, with its contexts.

    Parameters
    ----------
    label : str
        Name of the entity, e.g. ``"Honesty"``.
    state : StateVector | DensityMatrix
        Current state :math:`p_A`.
    contexts : Mapping[str, SpectralFamily]
        Measurements that can be performed on the entity.

    """

    label: str
    state: AnyState
    contexts: Mapping[str, SpectralFamily] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check that all contexts live in the space of the state."""
        for name, family in self.contexts.items():
            if family.dim != self.state.dim:
                raise ContractViolation(
                    f"Context {name} has dim {family.dim}, but state of "
                    f"{self.label} has dim {self.state.dim}."
                )
        object.__setattr__(
            self, "contexts", MappingProxyType(dict(self.contexts))
        )

    def _context(self, name: str) -> SpectralFamily:
        """Get a context, or raise a helpful error."""
        if name not in self.contexts:
            raise ContractViolation(
                f"{self.label} has no context {name}; available: "
                f"{list(self.contexts)}"
            )
        return self.contexts[name]

    def transition_probability(
        self, context: str, outcome: int | str
    ) -> float:
        """Give the probability of ``outcome`` when ``context`` is applied."""
        family = self._context(context)
        return born_probability(self.state, family[outcome])

    def measure(self, context: str, outcome: int | str) -> Self:
        """Give the entity after ``outcome`` of ``context`` was obtained."""
        family = self._context(context)
        return replace(self, state=luders_update(self.state, family[outcome]))
