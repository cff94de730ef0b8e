"""Check Born probabilities, Lüders updates and sequences of measurements."""

import numpy as np
import pytest
from tests.pytest_helpers.oracles import (
    naive_sequence_probability,
    outcome_tree,
)

from cogniq.core.errors import ContractViolation, ZeroProbabilityOutcome
from cogniq.core.measurement import (
    born_probabilities,
    born_probability,
    clamp_probability,
    commutator_frobenius_norm,
    luders_update,
    sequential_probability,
)
from cogniq.core.projectors import Projector, SpectralFamily
from cogniq.core.random_models import (
    random_ranks,
    random_spectral_family,
    random_state,
    spawn_generators,
)
from cogniq.core.states import DensityMatrix, StateVector, as_density_array


@pytest.fixture(scope="class")
def qubit_families() -> tuple[SpectralFamily, SpectralFamily]:
    """Give the z and x measurements of a qubit."""
    z = SpectralFamily.from_projector(Projector(np.diag([1.0, 0.0])))
    plus = np.array([1.0, 1.0]) / np.sqrt(2.0)
    x = SpectralFamily.from_projector(Projector(np.outer(plus, plus)))
    return z, x


@pytest.mark.smoke
class TestBorn:
    """Single measurements."""

    def test_basis_state(self) -> None:
        """A basis state gives a certain outcome."""
        state = StateVector.basis(3, 2)
        projector = Projector(np.diag([0.0, 0.0, 1.0]))
        obtained = born_probability(state, projector)
        assert obtained == pytest.approx(1.0), f"{obtained = }"

    def test_pure_and_mixed_agree(self) -> None:
        """Vector and density matrix of a state give the same result."""
        state = random_state(4, 1)
        family = random_spectral_family(4, (1, 3), 2)
        obtained = born_probabilities(state.to_density(), family)
        expected = born_probabilities(state, family)
        assert np.allclose(obtained, expected), (
            f"{obtained = } but {expected = }"
        )

    def test_probabilities_sum_to_one(self) -> None:
        """The outcomes of a complete family are exhaustive."""
        state = random_state(5, 3)
        family = random_spectral_family(5, (2, 1, 2), 4)
        obtained = float(born_probabilities(state, family).sum())
        assert obtained == pytest.approx(1.0, abs=1e-12), f"{obtained = }"

    @pytest.mark.slow
    def test_sum_to_one_random(self) -> None:
        """A thousand random states and families, dimensions 2 to 6."""
        for i, rng in enumerate(spawn_generators(2024, 1000)):
            dim = int(rng.integers(2, 7))
            n_outcomes = int(rng.integers(2, dim + 1))
            family = random_spectral_family(
                dim, random_ranks(dim, n_outcomes, rng), rng
            )
            state = random_state(dim, rng)
            obtained = float(born_probabilities(state, family).sum())
            assert abs(obtained - 1.0) < 1e-10, f"Case {i}: {obtained = }"

    def test_dimension_mismatch(self) -> None:
        """A qubit state cannot be measured with a qutrit projector."""
        with pytest.raises(ContractViolation):
            born_probability(
                StateVector.basis(2, 0), Projector(np.diag([1.0, 0.0, 0.0]))
            )

    def test_clamp(self) -> None:
        """Tiny excursions are clamped, large ones raise."""
        assert clamp_probability(1.0 + 1e-13) == 1.0
        assert clamp_probability(-1e-13) == 0.0
        with pytest.raises(ContractViolation):
            clamp_probability(1.1)


@pytest.mark.smoke
class TestLuders:
    """State updates."""

    def test_update_is_idempotent(self, qubit_families) -> None:
        """Measuring again the same question gives the same answer."""
        _, x = qubit_families
        state = random_state(2, 5)
        updated = luders_update(state, x["yes"])
        obtained = born_probability(updated, x["yes"])
        assert obtained == pytest.approx(1.0), f"{obtained = }"

    def test_zero_probability(self, qubit_families) -> None:
        """Conditioning on an impossible outcome raises."""
        z, _ = qubit_families
        with pytest.raises(ZeroProbabilityOutcome):
            luders_update(StateVector.basis(2, 1), z["yes"])

    def test_mixed_update(self, qubit_families) -> None:
        """The maximally mixed state collapses on the eigenstate."""
        z, _ = qubit_families
        updated = luders_update(DensityMatrix.maximally_mixed(2), z["yes"])
        assert isinstance(updated, DensityMatrix)
        assert np.allclose(updated.entries, np.diag([1.0, 0.0]))

    def test_input_untouched(self, qubit_families) -> None:
        """Updates return new objects."""
        _, x = qubit_families
        state = StateVector.basis(2, 0)
        before = state.amplitudes.copy()
        luders_update(state, x["no"])
        assert np.array_equal(state.amplitudes, before)


class TestSequences:
    """Sequences of measurements, checked against a naive implementation."""

    @pytest.mark.smoke
    def test_non_commuting_qubit(self, qubit_families) -> None:
        """From ``|0>``, z then x gives 1/2 for every branch with z = yes."""
        z, x = qubit_families
        state = StateVector.basis(2, 0)
        obtained = sequential_probability(state, [(z, "yes"), (x, "no")])
        assert obtained == pytest.approx(0.5), f"{obtained = }"
        obtained = sequential_probability(state, [(x, "yes"), (z, "no")])
        assert obtained == pytest.approx(0.25), f"{obtained = }"

    @pytest.mark.smoke
    def test_impossible_intermediate(self, qubit_families) -> None:
        """An impossible first outcome gives 0 rather than an error."""
        z, x = qubit_families
        obtained = sequential_probability(
            StateVector.basis(2, 0), [(z, "no"), (x, "yes")]
        )
        assert obtained == 0.0, f"{obtained = }"

    @pytest.mark.smoke
    def test_empty_sequence(self) -> None:
        """At least one step is needed."""
        with pytest.raises(ContractViolation):
            sequential_probability(StateVector.basis(2, 0), [])

    @pytest.mark.parametrize("dim, n_steps", ((2, 3), (3, 2), (4, 3)))
    def test_against_naive(self, dim: int, n_steps: int) -> None:
        """Every branch matches the step-by-step conditioning."""
        rngs = spawn_generators(42 + dim, n_steps + 1)
        state = random_state(dim, rngs[0])
        families = [
            random_spectral_family(dim, random_ranks(dim, 2, rng), rng)
            for rng in rngs[1:]
        ]
        tree = outcome_tree(
            as_density_array(state), [[m.matrix for m in f] for f in families]
        )
        for branch, expected in tree.items():
            steps = list(zip(families, branch))
            obtained = sequential_probability(state, steps)
            assert obtained == pytest.approx(expected, abs=1e-12), (
                f"{branch = }: {obtained = } but {expected = }"
            )
        total = sum(tree.values())
        assert total == pytest.approx(1.0, abs=1e-12), f"{total = }"

    def test_single_step_is_born(self) -> None:
        """A sequence of one step is the Born probability."""
        state = random_state(3, 11)
        family = random_spectral_family(3, (1, 1, 1), 12)
        for outcome in range(3):
            obtained = sequential_probability(state, [(family, outcome)])
            expected = naive_sequence_probability(
                as_density_array(state), [family[outcome].matrix]
            )
            assert obtained == pytest.approx(expected, abs=1e-12)


@pytest.mark.smoke
class TestCommutator:
    """Commutators of projectors."""

    def test_commuting(self) -> None:
        """Diagonal projectors commute."""
        a = Projector(np.diag([1.0, 0.0, 1.0]))
        b = Projector(np.diag([1.0, 1.0, 0.0]))
        assert commutator_frobenius_norm(a, b) == pytest.approx(0.0)

    def test_non_commuting(self, qubit_families) -> None:
        """The z and x projectors of a qubit do not commute."""
        z, x = qubit_families
        obtained = commutator_frobenius_norm(z["yes"], x["yes"])
        expected = np.sqrt(2.0) / 2.0
        assert obtained == pytest.approx(expected), (
            f"{obtained = } but {expected = }"
        )
