"""Define constants."""

from importlib import resources

# Tolerances
NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_TOL = 1e-10
PROJECTOR_TOL = 1e-10
RANK_TOL = 1e-8
FAMILY_TOL = 1e-10
PROBABILITY_EPS = 1e-12  #: below, an outcome is considered impossible
CLAMP_TOL = 1e-10  #: max excursion out of [0, 1] that is silently clamped
EMPIRICAL_SUM_TOL = 1e-3
MODEL_SUM_TOL = 1e-10
SIMPLEX_TOL = 1e-9
STATE_BODY_TOL = 1e-9
GRAM_TOL = 1e-12
TIE_TOL = 1e-12  #: equality of weights and bounds
FIT_TIE_TOL = 1e-9  #: fit residuals closer than this are ranked by width

#: Maximum values of :math:`|q|` and :math:`|q'|`, used to normalize them.
Q_MAX = 1.0
Q_PRIME_MAX = 0.25

DEFAULT_SEED = 20150828

# Files
data_folder = resources.files("cogniq.data")
default_config = data_folder / "cogniq.toml"
clinton_gore = data_folder / "clinton_gore.json"
example_membership = data_folder / "example_membership.csv"
singlet_correlations = data_folder / "singlet_correlations.json"
