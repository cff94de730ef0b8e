"""Check generators, Bloch points and measurement simplexes."""

import numpy as np
import pytest

from cogniq.bloch.bloch_point import (
    BlochPoint,
    bloch_to_density,
    state_to_bloch,
)
from cogniq.bloch.generators import gell_mann_basis, gell_mann_matrices
from cogniq.bloch.simplex import collapse_probabilities_uniform, simplex_of
from cogniq.core.errors import ContractViolation, DegenerateFamily, NotAState
from cogniq.core.measurement import born_probabilities
from cogniq.core.random_models import (
    random_spectral_family,
    random_state,
    spawn_generators,
)
from cogniq.core.states import DensityMatrix, StateVector


@pytest.mark.smoke
class TestGenerators:
    """Generalized Gell-Mann matrices."""

    @pytest.mark.parametrize("dim", (2, 3, 4, 5))
    def test_count(self, dim: int) -> None:
        """There are :math:`n^2 - 1` generators."""
        assert len(gell_mann_basis(dim)) == dim**2 - 1

    def test_pauli(self) -> None:
        """Dimension 2 gives the Pauli matrices."""
        obtained = gell_mann_matrices(2)
        expected = np.array(
            [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]]
        )
        assert np.allclose(obtained, expected), f"{obtained = }"

    def test_dimension_one(self) -> None:
        """No generator in dimension 1."""
        with pytest.raises(ContractViolation):
            gell_mann_matrices(1)


@pytest.mark.smoke
class TestBlochPoint:
    """Mapping states to the sphere and back."""

    @pytest.mark.parametrize("dim", (2, 3, 4))
    def test_pure_states_on_sphere(self, dim: int) -> None:
        """Pure states have unit norm."""
        point = state_to_bloch(random_state(dim, dim), gell_mann_basis(dim))
        assert point.norm == pytest.approx(1.0), f"{point.norm = }"

    def test_maximally_mixed_at_origin(self) -> None:
        """The maximally mixed state is the center of the sphere."""
        basis = gell_mann_basis(3)
        point = state_to_bloch(DensityMatrix.maximally_mixed(3), basis)
        assert point.norm == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("dim", (2, 3, 4))
    def test_round_trip(self, dim: int) -> None:
        """Density matrices are rebuilt from their points."""
        basis = gell_mann_basis(dim)
        state = random_state(dim, 10 + dim)
        rebuilt = bloch_to_density(state_to_bloch(state, basis), basis)
        assert np.allclose(rebuilt.entries, state.to_density().entries)

    def test_not_a_state(self) -> None:
        """The antipode of a pure qutrit state is not a state."""
        basis = gell_mann_basis(3)
        point = state_to_bloch(StateVector.basis(3, 0), basis)
        antipode = BlochPoint(-point.coords, 3)
        assert antipode.norm == pytest.approx(1.0)
        with pytest.raises(NotAState):
            bloch_to_density(antipode, basis)

    def test_qubit_antipode_is_a_state(self) -> None:
        """For a qubit the whole sphere is made of states."""
        basis = gell_mann_basis(2)
        point = state_to_bloch(StateVector.basis(2, 0), basis)
        rebuilt = bloch_to_density(BlochPoint(-point.coords, 2), basis)
        assert np.allclose(rebuilt.entries, np.diag([0.0, 1.0]))

    def test_wrong_number_of_coordinates(self) -> None:
        """A qutrit point has 8 coordinates."""
        with pytest.raises(ContractViolation):
            BlochPoint(np.zeros(3), 3)


class TestSimplex:
    """Uniform membranes give back the Born rule."""

    @pytest.mark.smoke
    def test_degenerate_family(self) -> None:
        """A rank-2 projector has no vertex."""
        family = random_spectral_family(3, (1, 2), 0)
        with pytest.raises(DegenerateFamily):
            simplex_of(family, gell_mann_basis(3))

    @pytest.mark.slow
    @pytest.mark.parametrize("dim", (2, 3, 4, 5))
    def test_barycentric_is_born(self, dim: int) -> None:
        """Barycentric coordinates are Born probabilities, 250 draws."""
        basis = gell_mann_basis(dim)
        for rng in spawn_generators(100 + dim, 250):
            state = random_state(dim, rng)
            family = random_spectral_family(dim, (1,) * dim, rng)
            simplex = simplex_of(family, basis)
            obtained = collapse_probabilities_uniform(
                state_to_bloch(state, basis), simplex
            )
            expected = born_probabilities(state, family)
            assert np.allclose(obtained, expected, atol=1e-10), (
                f"{obtained = } but {expected = }"
            )

    def test_mixed_state(self) -> None:
        """The center of the sphere gives equiprobable outcomes."""
        basis = gell_mann_basis(4)
        family = random_spectral_family(4, (1, 1, 1, 1), 8)
        point = state_to_bloch(DensityMatrix.maximally_mixed(4), basis)
        obtained = collapse_probabilities_uniform(
            point, simplex_of(family, basis)
        )
        assert np.allclose(obtained, 0.25), f"{obtained = }"

    def test_vertices_are_regular(self) -> None:
        """Distinct vertices have a scalar product of :math:`-1/(n-1)`."""
        basis = gell_mann_basis(3)
        simplex = simplex_of(random_spectral_family(3, (1, 1, 1), 2), basis)
        vertices = simplex.vertices
        assert vertices[0].dot(vertices[1]) == pytest.approx(-0.5)
