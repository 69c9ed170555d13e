"""Shared exception types."""


class ParseError(ValueError):
    """Malformed textual input: braid word, Gauss code, polynomial, or CLI value."""


class BudgetExceededError(RuntimeError):
    """A configured resource bound was hit before the computation finished.

    Raised instead of returning a partial or wrong answer; distinct from
    mathematical/validation errors so callers can map it to a dedicated
    exit code.
    """
