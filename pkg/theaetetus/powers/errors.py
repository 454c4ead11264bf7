class NotNaturalError(ValueError):
    """Raised when a value is not a natural number (an ``int`` greater or equal to 1)."""


class PreconditionError(ValueError):
    """Raised when a fact asserted by the caller does not hold."""


class FalseClaimError(PreconditionError):
    """Raised when a claimed square root does not square to the given integer."""


class InvariantViolation(RuntimeError):
    """Raised when a theorem checked at runtime fails. Seeing this means an arithmetic bug."""


class MalformedFigureError(ValueError):
    """Raised when a figure refers to a point label it does not define."""


class ExpressionError(ValueError):
    """Raised when a ratio, surd or expression text cannot be parsed."""
