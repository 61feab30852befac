class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedSingularityError(DomainError):
    pass


class ResourceBoundError(DomainError):
    """Requested enumeration exceeds the configured size cap."""


class ModelConsistencyError(DomainError):
    pass


class InvariantViolation(AssertionError):
    """An internal consistency check failed; indicates corrupted constants."""
