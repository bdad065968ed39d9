"""Exception types shared across the package."""


class PermrelError(Exception):
    """Base class for every error raised by permrel."""


class PreconditionError(PermrelError, ValueError):
    """An operation was called on an instance that does not satisfy its hypotheses."""


class BudgetExceeded(PermrelError, RuntimeError):
    """A class-size cap or enumeration budget was hit."""


class InconsistencyError(PermrelError, AssertionError):
    """Two independent computations disagreed; this always signals a bug."""
