"""Define a Downhill Simplex with penalty.

Approach is here to make the residues grow when the constraints are not
respected.

"""

from cogniq.optimisation.algorithms.downhill_simplex import DownhillSimplex


class DownhillSimplexPenalty(DownhillSimplex):
    """A Downhill Simplex method, with a penalty function for constraints.

    The weighted constraint violations are appended to the residuals, see
    :meth:`.OptimisationAlgorithm._wrapper_residuals`. Everything else is
    inherited from :class:`.DownhillSimplex`.

    """

    supports_constraints = True
