"""Define the exceptions raised throughout the library.

All of them derive from :class:`ValueError` (or :class:`ArithmeticError`), so
that the command-line interface can catch every input or contract problem in a
single place.

"""


class ContractViolation(ValueError):
    """Raised when inputs break a type invariant or a pre-condition."""


class ZeroProbabilityOutcome(ArithmeticError):
    """Raised when conditioning on an outcome that cannot occur."""


class DegenerateMarginal(ValueError):
    """Raised when a first-question marginal is too small to condition on."""


class NotAState(ValueError):
    """Raised when a Bloch point lies outside the convex body of states."""


class DegenerateFamily(ValueError):
    """Raised when a rank-1 spectral family was expected."""


class InvalidGeometry(ArithmeticError):
    """Raised when a projection falls outside its measurement simplex."""


class InconsistentGeometry(ValueError):
    """Raised when coordinates and axes cannot coexist in a Bloch sphere."""


class InfeasibleTable(ValueError):
    """Raised when a sequential table cannot be fitted at all."""


class TooLarge(ValueError):
    """Raised when an enumeration exceeds the configured size cap."""


class SchemaError(ValueError):
    """Raised when a dataset does not match its declared schema.

    Parameters
    ----------
    message : str
        Human-readable description of the problem.
    record_index : int | None, optional
        Index of the faulty record (row for CSV files). The default is None.
    field : str | None, optional
        Name of the faulty field. The default is None.

    """

    def __init__(
        self,
        message: str,
        record_index: int | None = None,
        field: str | None = None,
    ) -> None:
        super().__init__(message)
        self.record_index = record_index
        self.field = field
