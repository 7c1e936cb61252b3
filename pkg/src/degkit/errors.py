"""Exception types shared across the toolkit."""


class DegkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidInputError(DegkitError, ValueError):
    """An argument violates a documented precondition."""


class EdgeConflictError(InvalidInputError):
    """An edge operation clashes with edges already present (or duplicated)."""


class ParseError(DegkitError, ValueError):
    """Malformed instance or solution text.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(DegkitError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class InternalInvariantError(DegkitError, AssertionError):
    """A guarantee that should hold by construction was violated.

    Raised only on genuine defects; test suites hook on this to detect
    broken win-win preconditions.
    """
