"""Exceptions raised by heunkit.

Hierarchy:
    HeunkitError (base)
    ├── InvalidParameterError
    ├── DomainError
    ├── NoConvergenceError
    ├── ShapeError
    ├── DegenerateError
    ├── MissingColumnError
    ├── InconsistentBranchingError
    ├── PunctureError
    ├── SingularMapError
    ├── ZeroLeadingCoefficientError
    ├── ClosureOverflowError
    ├── UnknownSuiteError
    ├── UnknownRuleError
    └── ConfigurationError
"""

from typing import Any


class HeunkitError(Exception):
    """Base exception for heunkit.

    Attributes:
        message: Error message.
        details: Extra structured context, merged into log records.
    """

    def __init__(
        self,
        message: str,
        *,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.details = details or {}

    def __str__(self) -> str:
        result = super().__str__()
        if self.details:
            result += f" | Details: {self.details}"
        return result

    def to_dict(self) -> dict[str, Any]:
        """Convert the exception to a dict for structured logs."""
        return {
            "error_type": self.__class__.__name__,
            "message": str(self),
            "details": self.details,
        }


class InvalidParameterError(HeunkitError):
    """A parameter lies on a pole or outside its admissible set."""

    def __init__(
        self,
        message: str,
        *,
        parameter: str | None = None,
        value: Any = None,
    ) -> None:
        details = {"parameter": parameter, "value": str(value)} if parameter else None
        super().__init__(message, details=details)


class DomainError(HeunkitError):
    """Evaluation point outside the safe convergence disk."""

    def __init__(
        self,
        message: str,
        *,
        point: complex | None = None,
        radius: float | None = None,
    ) -> None:
        details: dict[str, Any] = {}
        if point is not None:
            details["point"] = str(point)
        if radius is not None:
            details["radius"] = radius
        super().__init__(message, details=details)


class NoConvergenceError(HeunkitError):
    """Series did not meet its stopping criterion within max_terms."""

    def __init__(
        self,
        message: str,
        *,
        terms: int | None = None,
        tail: float | None = None,
    ) -> None:
        details: dict[str, Any] = {"terms": terms}
        if tail is not None:
            details["tail"] = tail
        super().__init__(message, details=details)


class ShapeError(HeunkitError):
    """Input does not have the shape an operation requires."""

    def __init__(
        self,
        message: str,
        *,
        expected: str | None = None,
        actual: str | None = None,
    ) -> None:
        details = {"expected": expected, "actual": actual} if expected else None
        super().__init__(message, details=details)


class DegenerateError(HeunkitError):
    """Degenerate configuration (confluent roots, vanishing normalizer)."""

    def __init__(self, message: str, *, reason: str | None = None) -> None:
        details = {"reason": reason} if reason else None
        super().__init__(message, details=details)


class MissingColumnError(HeunkitError):
    """A P-symbol has no column at the requested location."""

    def __init__(self, message: str, *, location: str | None = None) -> None:
        details = {"location": location} if location else None
        super().__init__(message, details=details)


class InconsistentBranchingError(HeunkitError):
    """Branch multiplicities over an image point do not add up to the degree."""

    def __init__(
        self,
        message: str,
        *,
        image: str | None = None,
        total: int | None = None,
        degree: int | None = None,
    ) -> None:
        super().__init__(message, details={"image": image, "total": total, "degree": degree})


class PunctureError(HeunkitError):
    """A curve parameter hit one of its excluded values."""

    def __init__(
        self,
        message: str,
        *,
        value: Any = None,
        puncture: Any = None,
    ) -> None:
        super().__init__(message, details={"value": str(value), "puncture": str(puncture)})


class SingularMapError(HeunkitError):
    """An e-map of the restricted 3F2 family is singular or leaves the family."""

    def __init__(self, message: str, *, parameter: str | None = None) -> None:
        details = {"parameter": parameter} if parameter else None
        super().__init__(message, details=details)


class ZeroLeadingCoefficientError(HeunkitError):
    """Proportionality constant of a derivative identity is undefined."""


class ClosureOverflowError(HeunkitError):
    """Group closure produced more elements than the group can have."""

    def __init__(
        self,
        message: str,
        *,
        limit: int | None = None,
        size: int | None = None,
    ) -> None:
        super().__init__(message, details={"limit": limit, "size": size})


class UnknownSuiteError(HeunkitError):
    """Requested verification suite does not exist."""

    def __init__(self, message: str, *, suite: str | None = None) -> None:
        details = {"suite": suite} if suite else None
        super().__init__(message, details=details)


class UnknownRuleError(HeunkitError):
    """Requested rule label is not in any catalog."""

    def __init__(self, message: str, *, label: str | None = None) -> None:
        details = {"label": label} if label else None
        super().__init__(message, details=details)


class ConfigurationError(HeunkitError):
    """Invalid configuration value."""

    def __init__(
        self,
        message: str,
        *,
        config_key: str | None = None,
    ) -> None:
        details = {"config_key": config_key} if config_key else None
        super().__init__(message, details=details)
