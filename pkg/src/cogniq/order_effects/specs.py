"""Define the allowed configuration of the Hilbert space fit."""

from cogniq.config.key_val_conf_spec import KeyValConfSpec

FIT_HILBERT_CONFIG = (
    KeyValConfSpec(
        key="restarts",
        types=(int,),
        description="Number of random starting points.",
        default_value=32,
        bounds=(1, 100_000),
    ),
    KeyValConfSpec(
        key="xatol",
        types=(float, int),
        description="Absolute tolerance of Nelder-Mead on the angles.",
        default_value=1e-12,
        bounds=(0.0, 1.0),
    ),
    KeyValConfSpec(
        key="fatol",
        types=(float, int),
        description="Absolute tolerance of Nelder-Mead on the residual.",
        default_value=1e-12,
        bounds=(0.0, 1.0),
    ),
    KeyValConfSpec(
        key="max_iter",
        types=(int,),
        description="Maximum number of iterations per start.",
        default_value=4000,
        bounds=(1, 10_000_000),
    ),
    KeyValConfSpec(
        key="polish",
        types=(bool,),
        description="Refine every descent with a least-squares algorithm.",
        default_value=True,
    ),
)
