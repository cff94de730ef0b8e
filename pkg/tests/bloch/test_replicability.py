"""Check the simulation of participants answering sequences."""

import math

import pytest

from cogniq.bloch.membrane_model import MembraneTwoQuestionModel
from cogniq.bloch.membranes import IntervalMembrane
from cogniq.bloch.replicability import (
    replicability_agreement,
    simulate_replicability,
)
from cogniq.core.errors import ContractViolation


@pytest.fixture(scope="module")
def uniform_model() -> MembraneTwoQuestionModel:
    """Give uniform membranes on axes of cosine 0.5."""
    return MembraneTwoQuestionModel(0.3, -0.2, 0.5, questions=("C", "G"))


class TestReplicability:
    """Memory makes answers replicable, memoryless membranes do not."""

    @pytest.mark.smoke
    def test_memory(self, uniform_model) -> None:
        """The repeated question always gets the same answer."""
        stats = simulate_replicability(
            uniform_model, ("G", "C", "G"), 10_000, "memory", seed=1
        )
        obtained = stats.agreement["G@2 == G@0"]
        assert obtained == 1.0, f"{obtained = }"
        assert sum(stats.patterns.values()) == 10_000
        assert not any(p[0] != p[2] for p in stats.patterns)

    def test_memory_with_narrow_membranes(self) -> None:
        """Replicability does not depend on the membranes."""
        model = MembraneTwoQuestionModel(
            0.1,
            0.2,
            0.3,
            IntervalMembrane(-0.2, 0.4),
            IntervalMembrane(-0.6, 0.1),
            questions=("C", "G"),
        )
        stats = simulate_replicability(
            model, ("C", "G", "C", "G"), 5_000, "memory", seed=2
        )
        assert stats.agreement == {"C@2 == C@0": 1.0, "G@3 == G@1": 1.0}

    def test_memoryless(self, uniform_model) -> None:
        """Without memory, agreement matches its exact value."""
        participants = 20_000
        stats = simulate_replicability(
            uniform_model, ("G", "C", "G"), participants, "memoryless", 3
        )
        obtained = stats.agreement["G@2 == G@0"]
        expected = replicability_agreement(uniform_model, "G", "C")
        sigma = math.sqrt(expected * (1.0 - expected) / participants)
        assert expected < 1.0 - 1e-3, f"{expected = }"
        assert abs(obtained - expected) < 4.0 * sigma, (
            f"{obtained = } but {expected = } ({sigma = })"
        )

    @pytest.mark.smoke
    def test_analytic_uniform(self, uniform_model) -> None:
        """With uniform membranes, agreement is the qubit value."""
        obtained = replicability_agreement(uniform_model, "G", "C")
        expected = 0.75**2 + 0.25**2
        assert obtained == pytest.approx(expected), (
            f"{obtained = } but {expected = }"
        )

    @pytest.mark.smoke
    def test_deterministic(self, uniform_model) -> None:
        """The same seed gives the same statistics."""
        first = simulate_replicability(uniform_model, seed=4)
        second = simulate_replicability(uniform_model, seed=4)
        assert first.to_dict() == second.to_dict()

    @pytest.mark.smoke
    def test_first_frequencies(self, uniform_model) -> None:
        """The first answer follows the membrane of the first question."""
        stats = simulate_replicability(
            uniform_model, ("C",), 20_000, "memoryless", seed=5
        )
        obtained = stats.yes_frequencies[0]
        assert obtained == pytest.approx(0.65, abs=0.015), f"{obtained = }"

    @pytest.mark.smoke
    def test_unknown_question(self, uniform_model) -> None:
        """Questions must belong to the model."""
        with pytest.raises(ContractViolation):
            simulate_replicability(uniform_model, ("G", "X"))

    @pytest.mark.smoke
    def test_unknown_policy(self, uniform_model) -> None:
        """Only two policies exist."""
        with pytest.raises(ContractViolation):
            simulate_replicability(uniform_model, policy="forgetful")
