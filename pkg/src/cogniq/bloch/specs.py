"""Define the allowed configuration of the membrane operations."""

from cogniq.config.key_val_conf_spec import KeyValConfSpec

FIT_MEMBRANE_CONFIG = (
    KeyValConfSpec(
        key="restarts",
        types=(int,),
        description="Number of starting points, the analytic one included.",
        default_value=32,
        bounds=(1, 100_000),
    ),
    KeyValConfSpec(
        key="tol",
        types=(float, int),
        description="Maximum residual of a converged fit.",
        default_value=1e-4,
        bounds=(0.0, 1.0),
    ),
    KeyValConfSpec(
        key="penalty_weight",
        types=(float, int),
        description="Weight of the constraint violations.",
        default_value=10.0,
        bounds=(0.0, 1e6),
    ),
    KeyValConfSpec(
        key="min_half_width",
        types=(float, int),
        description="Minimum half-width of the breakable regions.",
        default_value=1e-6,
        bounds=(0.0, 1.0),
    ),
    KeyValConfSpec(
        key="max_iter",
        types=(int,),
        description="Maximum number of iterations per start.",
        default_value=6000,
        bounds=(1, 10_000_000),
    ),
)

UNIVERSAL_CONFIG = (
    KeyValConfSpec(
        key="samples",
        types=(int,),
        description="Number of random membranes per grid point.",
        default_value=100_000,
        bounds=(1, 1_000_000_000),
    ),
    KeyValConfSpec(
        key="max_cells",
        types=(int,),
        description="Maximum number of cells of a random membrane.",
        default_value=20,
        bounds=(1, 10_000),
    ),
    KeyValConfSpec(
        key="grid_points",
        types=(int,),
        description="Number of coordinates between -1 and 1.",
        default_value=11,
        bounds=(2, 100_000),
    ),
    KeyValConfSpec(
        key="weight_distribution",
        types=(str,),
        description="Distribution of the cell masses before normalisation.",
        default_value="exponential",
        allowed_values=("exponential", "uniform"),
    ),
)

REPLICABILITY_CONFIG = (
    KeyValConfSpec(
        key="participants",
        types=(int,),
        description="Number of simulated participants.",
        default_value=10_000,
        bounds=(1, 1_000_000_000),
    ),
    KeyValConfSpec(
        key="sequence",
        types=(list,),
        description="Labels of the questions, in the order they are asked.",
        default_value=["G", "C", "G"],
    ),
    KeyValConfSpec(
        key="policy",
        types=(str,),
        description="If answered questions keep their answer.",
        default_value="memory",
        allowed_values=("memory", "memoryless"),
    ),
    KeyValConfSpec(
        key="membrane",
        types=(str,),
        description="Simulate the fitted membranes, or uniform ones.",
        default_value="fitted",
        allowed_values=("fitted", "uniform"),
    ),
)
