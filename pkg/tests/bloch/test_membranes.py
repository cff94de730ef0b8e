"""Check the membranes and the universal average."""

import numpy as np
import pytest

from cogniq.bloch.membranes import (
    CertainMembrane,
    IntervalMembrane,
    PiecewiseConstantMembrane,
    UniformMembrane,
    collapse_probabilities_membrane,
    membrane_cdf,
    sample_break_points,
    sample_collapse,
)
from cogniq.bloch.universal import (
    random_piecewise_membrane,
    universal_measurement_probability,
    universal_sweep,
)
from cogniq.core.errors import ContractViolation


@pytest.mark.smoke
class TestMembranes:
    """Cumulative masses and sampling."""

    @pytest.mark.parametrize("e", (-1.0, -0.4, 0.0, 0.25, 1.0))
    def test_uniform_is_born(self, e: float) -> None:
        """The uniform membrane gives :math:`(1 + e) / 2`."""
        obtained = collapse_probabilities_membrane(e, UniformMembrane())
        expected = (0.5 * (1.0 + e), 0.5 * (1.0 - e))
        assert obtained == pytest.approx(expected), (
            f"{obtained = } but {expected = }"
        )

    def test_interval(self) -> None:
        """Nothing breaks out of the region."""
        membrane = IntervalMembrane(-0.5, 0.5)
        assert membrane_cdf(membrane, -0.8) == 0.0
        assert membrane_cdf(membrane, 0.0) == pytest.approx(0.5)
        assert membrane_cdf(membrane, 0.9) == 1.0

    def test_invalid_interval(self) -> None:
        """The region must be inside the segment and not empty."""
        with pytest.raises(ContractViolation):
            IntervalMembrane(0.5, 0.5)
        with pytest.raises(ContractViolation):
            IntervalMembrane(-1.5, 0.5)

    def test_piecewise(self) -> None:
        """The mass grows cell by cell."""
        membrane = PiecewiseConstantMembrane(
            np.array([-1.0, 0.0, 1.0]), np.array([0.2, 0.8])
        )
        assert membrane_cdf(membrane, 0.0) == pytest.approx(0.2)
        assert membrane_cdf(membrane, 0.5) == pytest.approx(0.6)

    def test_piecewise_mass(self) -> None:
        """Cell masses must sum to 1."""
        with pytest.raises(ContractViolation):
            PiecewiseConstantMembrane(
                np.array([-1.0, 0.0, 1.0]), np.array([0.2, 0.7])
            )

    def test_coordinate_out_of_segment(self) -> None:
        """Particles live on :math:`[-1, 1]`."""
        with pytest.raises(ContractViolation):
            membrane_cdf(UniformMembrane(), 1.5)

    def test_certain(self) -> None:
        """A certain membrane ignores the particle."""
        assert membrane_cdf(CertainMembrane(True), -1.0) == 1.0
        assert membrane_cdf(CertainMembrane(False), 1.0) == 0.0
        assert sample_collapse(-1.0, CertainMembrane(True), 0).outcome == (
            "yes"
        )

    def test_sampled_frequency(self) -> None:
        """Sampled breaks follow the cumulative mass."""
        membrane = IntervalMembrane(-0.2, 0.6)
        points = sample_break_points(membrane, 20_000, 4)
        assert points.min() >= -0.2 and points.max() <= 0.6
        obtained = float(np.mean(points <= 0.2))
        assert obtained == pytest.approx(0.5, abs=0.02), f"{obtained = }"

    def test_collapse_goes_to_vertex(self) -> None:
        """After a collapse the particle sits on a vertex."""
        collapse = sample_collapse(0.3, UniformMembrane(), 1)
        expected = 1.0 if collapse.outcome == "yes" else -1.0
        assert collapse.coordinate == expected


class TestUniversal:
    """Averaging over random membranes gives the Born rule."""

    @pytest.mark.smoke
    def test_random_membrane(self) -> None:
        """Random membranes are valid piecewise constant ones."""
        membrane = random_piecewise_membrane(3, max_cells=5)
        assert 1 <= len(membrane.weights) <= 5
        assert membrane.weights.sum() == pytest.approx(1.0)

    @pytest.mark.smoke
    def test_ends_of_segment(self) -> None:
        """Vertices give certain outcomes."""
        assert universal_measurement_probability(1.0, samples=10) == 1.0
        assert universal_measurement_probability(-1.0, samples=10) == 0.0

    @pytest.mark.smoke
    def test_deterministic(self) -> None:
        """The average only depends on the seed and the sample size."""
        first = universal_measurement_probability(0.3, samples=2000, seed=9)
        second = universal_measurement_probability(0.3, samples=2000, seed=9)
        assert first == second, f"{first = } but {second = }"

    @pytest.mark.smoke
    def test_invalid_samples(self) -> None:
        """At least one membrane is needed."""
        with pytest.raises(ContractViolation):
            universal_measurement_probability(0.3, samples=0)

    @pytest.mark.slow
    @pytest.mark.parametrize("distribution", ("exponential", "uniform"))
    def test_convergence(self, distribution: str) -> None:
        """On the grid, the average is within 0.005 of Born."""
        sweep = universal_sweep(
            samples=100_000, seed=2015, weight_distribution=distribution
        )
        assert list(sweep.columns) == ["e", "average", "born", "difference"]
        worst = float(sweep["difference"].abs().max())
        assert worst < 0.005, f"{worst = }"

    def test_small_sweep(self) -> None:
        """A coarse sweep is already close to the Born rule."""
        sweep = universal_sweep(
            grid=np.array([-0.5, 0.0, 0.5]), samples=20_000, seed=1
        )
        worst = float(sweep["difference"].abs().max())
        assert worst < 0.02, f"{worst = }"
