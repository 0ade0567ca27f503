class CxkitError(Exception):
    """Base class for all errors raised by cxkit."""


class ParseError(CxkitError, ValueError):
    """Malformed descriptor, word or permutation.

    ``token`` names the offending piece of input.
    """

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class GuardExceeded(CxkitError):
    """A group, interval or search is larger than the configured bound."""


class BudgetExceeded(CxkitError):
    """A bounded search ran out of budget before reaching a verdict."""


class CoxeterMatrixViolation(CxkitError, ValueError):
    """A generator permutation does not preserve the Coxeter matrix."""
