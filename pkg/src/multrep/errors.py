"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An enumeration or count would exceed a configured output cap."""


class FactorizationLimitError(RuntimeError):
    """The integer exceeds the trial-division budget (or 64-bit range)."""


class NotSquarefreeError(ValueError):
    """Raised when a squarefree integer was required."""


class SearchBudgetExceeded(RuntimeError):
    """A search ran out of its node budget before resolving.

    Distinct from a definite "no such object" answer, which is reported
    as None by the search functions.
    """


class CapacityOverflowError(OverflowError):
    """A value left the 64-bit range enforced at an interface boundary."""
