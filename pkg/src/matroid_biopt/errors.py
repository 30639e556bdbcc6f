"""Exception hierarchy shared by every module."""


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MatroidError, ValueError):
    """Bad user input: unknown element ids, malformed costs, bad parameters."""


class ParseError(InputError):
    """An instance file could not be parsed."""


class InfeasibleInstanceError(InputError):
    """The instance has no usable basis (rank 0, empty ground set, disconnected graph)."""


class PreconditionError(MatroidError, ValueError):
    """An operation was called with arguments violating its contract."""


class EnumerationBudgetExceeded(MatroidError):
    """Complete enumeration was refused because the basis count exceeds the budget."""

    def __init__(self, count, budget):
        super().__init__(f"{count} bases exceed the enumeration budget of {budget}")
        self.count = count
        self.budget = budget


class InvariantViolation(MatroidError, AssertionError):
    """An internal invariant failed. Always indicates a bug, never bad input."""
