"""Exception types shared across the package."""


class ApsumsError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(ApsumsError):
    """An operation was applied outside its mathematical domain (e.g. the zero polynomial)."""


class ParameterError(ApsumsError):
    """Invalid user-supplied parameters (a = 0, gcd(a, b) != 1, A = 0, ...)."""


class HypothesisError(ApsumsError):
    """A lemma check was requested outside the range where the lemma is stated."""
