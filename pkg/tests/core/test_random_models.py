"""Check reproducibility and validity of the random models."""

import numpy as np
import pytest

from cogniq.core.errors import ContractViolation
from cogniq.core.random_models import (
    random_ranks,
    random_spectral_family,
    random_state,
    random_unitary,
    spawn_generators,
    spawn_seeds,
)


@pytest.mark.smoke
class TestRandomModels:
    """Seeds fully determine the draws."""

    def test_same_seed_same_state(self) -> None:
        """Two draws with the same seed are identical."""
        first = random_state(5, 123).amplitudes
        second = random_state(5, 123).amplitudes
        assert np.array_equal(first, second)

    def test_spawned_streams_differ(self) -> None:
        """Children of a seed give different streams."""
        first, second = spawn_generators(7, 2)
        assert first.random() != second.random()

    def test_spawned_seeds_are_stable(self) -> None:
        """The i-th child does not depend on the number of children."""
        few = spawn_seeds(7, 2)
        many = spawn_seeds(7, 10)
        obtained = np.random.default_rng(few[1]).random()
        expected = np.random.default_rng(many[1]).random()
        assert obtained == expected, f"{obtained = } but {expected = }"

    def test_negative_number_of_seeds(self) -> None:
        """Spawning a negative number of children is meaningless."""
        with pytest.raises(ContractViolation):
            spawn_seeds(7, -1)

    def test_unitary(self) -> None:
        """Haar unitaries are unitary."""
        u = random_unitary(6, 9)
        assert np.allclose(u.conj().T @ u, np.eye(6))

    @pytest.mark.parametrize("ranks", ((1, 2), (2, 1), (1, 1, 1), (3,)))
    def test_family_ranks(self, ranks: tuple[int, ...]) -> None:
        """Projectors have the requested ranks."""
        family = random_spectral_family(3, ranks, 0)
        assert family.ranks == ranks, f"{family.ranks = } but {ranks = }"

    def test_invalid_ranks(self) -> None:
        """Ranks must sum to the dimension."""
        with pytest.raises(ContractViolation):
            random_spectral_family(3, (1, 1), 0)

    def test_random_ranks(self) -> None:
        """Drawn ranks are positive and sum to the dimension."""
        for seed in range(10):
            ranks = random_ranks(6, 3, seed)
            assert len(ranks) == 3 and sum(ranks) == 6 and min(ranks) >= 1
