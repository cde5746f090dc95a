"""Exception hierarchy shared by all modules.

The CLI maps ``PreconditionError`` to exit code 2 and everything derived from
``ComputationError`` to exit code 3.
"""


class PreconditionError(ValueError):
    """An operation was called with arguments outside its contract."""


class ComputationError(RuntimeError):
    """Base class for failures that depend on the data, not on the call."""


class DegeneracyError(ComputationError):
    """A predicate hit an exactly-zero sign on a point subset."""

    def __init__(self, message, subset=None):
        super().__init__(message)
        self.subset = tuple(subset) if subset is not None else None


class BudgetExceededError(ComputationError):
    """Exhaustive enumeration would exceed the configured subset budget."""


class ConstructionError(ComputationError):
    """The embedding builder ran out of retries."""
