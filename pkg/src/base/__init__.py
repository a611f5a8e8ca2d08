"""Base module for heunkit.

Shared building blocks:
- structured logging
- the exception hierarchy
- utility decorators
"""

from src.base.decorators import measure_time
from src.base.exceptions import (
    ClosureOverflowError,
    ConfigurationError,
    DegenerateError,
    DomainError,
    HeunkitError,
    InconsistentBranchingError,
    InvalidParameterError,
    MissingColumnError,
    NoConvergenceError,
    PunctureError,
    ShapeError,
    SingularMapError,
    UnknownRuleError,
    UnknownSuiteError,
    ZeroLeadingCoefficientError,
)
from src.base.logging import get_logger, setup_logging

__all__ = [
    "ClosureOverflowError",
    "ConfigurationError",
    "DegenerateError",
    "DomainError",
    "HeunkitError",
    "InconsistentBranchingError",
    "InvalidParameterError",
    "MissingColumnError",
    "NoConvergenceError",
    "PunctureError",
    "ShapeError",
    "SingularMapError",
    "UnknownRuleError",
    "UnknownSuiteError",
    "ZeroLeadingCoefficientError",
    "get_logger",
    "measure_time",
    "setup_logging",
]
