"""Exception hierarchy shared by all engine modules."""


class CobcalcError(Exception):
    """Base class for all engine errors."""


class ConfigError(CobcalcError):
    """Incompatible configuration, e.g. mixing objects built at different caps."""


class DomainError(CobcalcError):
    """An operation was called outside its mathematical domain."""


class NotDivisibleError(DomainError):
    """Exact series division failed; carries the first failing total degree."""

    def __init__(self, degree, message=None):
        self.degree = degree
        super().__init__(message or f"not divisible: first failing total degree {degree}")


class EliminationError(CobcalcError):
    """A degree-by-degree elimination was blocked or over-determined."""


class ConstructionError(CobcalcError):
    """A generator construction (linear solve) turned out infeasible."""
