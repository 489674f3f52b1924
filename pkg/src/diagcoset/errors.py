class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DimensionError(DomainError):
    """Weight vectors whose length does not match the rank."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured size budget."""

    def __init__(self, message, *, grade=None):
        super().__init__(message)
        self.grade = grade


class ConsistencyError(RuntimeError):
    """An internal invariant failed (negative residual, inexact division...)."""
