"""Exact computation of the Euler characteristic of OG10 hyper-Kahler manifolds."""

__version__ = "0.1.0"

from og10.errors import (
    DomainError,
    InvariantViolation,
    ModelConsistencyError,
    ResourceBoundError,
    UnsupportedSingularityError,
)

__all__ = [
    "__version__",
    "DomainError",
    "InvariantViolation",
    "ModelConsistencyError",
    "ResourceBoundError",
    "UnsupportedSingularityError",
]
