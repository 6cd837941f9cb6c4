"""Exception hierarchy shared by every module.

All errors derive from ``ValueError`` so callers that only care about bad
input can catch that; the CLI maps each subclass to its own exit status.
"""


class RSBentError(ValueError):
    """Base class for all library errors."""


class DimensionError(RSBentError):
    """Operands have mismatched or invalid lengths."""


class ParityError(RSBentError):
    """An even number of variables was required."""


class CapacityError(RSBentError):
    """The requested number of variables exceeds the configured maximum."""


class NormalizationError(RSBentError):
    """A vector that must be an orbit representative was not one."""


class ConstraintError(RSBentError):
    """A construction precondition (weight, range, non-emptiness) failed."""


class InvariantViolation(RuntimeError):
    """Internal self-check failed; indicates a bug, never bad input."""
