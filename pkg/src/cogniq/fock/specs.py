"""Define the allowed configuration of the occupation statistics."""

from cogniq.config.key_val_conf_spec import KeyValConfSpec

STATISTICS_CONFIG = (
    KeyValConfSpec(
        key="max_configurations",
        types=(int,),
        description="Maximum number of enumerated occupation configurations.",
        default_value=1_000_000,
        bounds=(1, 1_000_000_000),
    ),
)
