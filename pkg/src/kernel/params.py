"""Parameter records for the Gauss, Heun and 3F2 families.

Numeric fields are coerced to ``complex`` and validated in ``__post_init__``.
Anything that is not a number (sympy symbols, for instance) passes through
untouched, which lets the rule machinery evaluate parameter maps
symbolically when rendering the catalog.
"""

from __future__ import annotations

import cmath
import numbers
from dataclasses import dataclass, fields
from typing import Any

from src.base.exceptions import InvalidParameterError

POLE_TOLERANCE = 1e-8
"""Distance below which a value counts as a nonpositive integer."""

SINGULAR_TOLERANCE = 1e-10
"""Distance below which ``a`` counts as 0 or 1."""


def is_numeric(value: Any) -> bool:
    """Return True for plain numbers (including numpy scalars)."""
    return isinstance(value, numbers.Number)


def is_nonpositive_integer(value: complex, tol: float = POLE_TOLERANCE) -> bool:
    """Whether ``value`` lies within ``tol`` of 0, -1, -2, ..."""
    z = complex(value)
    if z.real > tol:
        return False
    nearest = round(z.real)
    return nearest <= 0 and abs(z - nearest) <= tol


def _coerce(instance: Any) -> bool:
    """Coerce numeric fields to complex in place; return True if all were numeric."""
    all_numeric = True
    for f in fields(instance):
        value = getattr(instance, f.name)
        if is_numeric(value):
            z = complex(value)
            if not (cmath.isfinite(z)):
                raise InvalidParameterError(
                    f"Parameter {f.name} is not finite", parameter=f.name, value=value
                )
            object.__setattr__(instance, f.name, z)
        else:
            all_numeric = False
    return all_numeric


def _check_lower(name: str, value: complex) -> None:
    if is_nonpositive_integer(value):
        raise InvalidParameterError(
            f"{name} must not be a nonpositive integer", parameter=name, value=value
        )


@dataclass(frozen=True)
class GaussParams:
    """Parameters (alpha, beta; gamma) of 2F1."""

    alpha: Any
    beta: Any
    gamma: Any

    def __post_init__(self) -> None:
        if _coerce(self):
            _check_lower("gamma", self.gamma)

    def as_tuple(self) -> tuple[Any, ...]:
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class HeunParams:
    """Parameters (a, q; alpha, beta; gamma, delta) of the local Heun function.

    ``epsilon`` is always derived from Fuchs's relation and never stored.
    """

    a: Any
    q: Any
    alpha: Any
    beta: Any
    gamma: Any
    delta: Any

    def __post_init__(self) -> None:
        if not _coerce(self):
            return
        if abs(self.a) <= SINGULAR_TOLERANCE or abs(self.a - 1) <= SINGULAR_TOLERANCE:
            raise InvalidParameterError("a must avoid 0 and 1", parameter="a", value=self.a)
        _check_lower("gamma", self.gamma)

    @property
    def epsilon(self) -> Any:
        return self.alpha + self.beta - self.gamma - self.delta + 1

    @property
    def radius(self) -> float:
        """Convergence radius min(1, |a|) of the series at x=0."""
        return min(1.0, abs(complex(self.a)))

    def as_tuple(self) -> tuple[Any, ...]:
        return (self.a, self.q, self.alpha, self.beta, self.gamma, self.delta)

    def replace(self, **changes: Any) -> HeunParams:
        values = dict(zip(("a", "q", "alpha", "beta", "gamma", "delta"), self.as_tuple()))
        values.update(changes)
        return HeunParams(**values)


@dataclass(frozen=True)
class ThreeF2Params:
    """Parameters (a1, a2, a3; b1, b2) of 3F2."""

    a1: Any
    a2: Any
    a3: Any
    b1: Any
    b2: Any

    def __post_init__(self) -> None:
        if _coerce(self):
            _check_lower("b1", self.b1)
            _check_lower("b2", self.b2)

    @property
    def excess(self) -> Any:
        """Parametric excess s = b1 + b2 - a1 - a2 - a3."""
        return self.b1 + self.b2 - self.a1 - self.a2 - self.a3

    @property
    def upper(self) -> tuple[Any, Any, Any]:
        return (self.a1, self.a2, self.a3)

    @property
    def lower(self) -> tuple[Any, Any]:
        return (self.b1, self.b2)


@dataclass(frozen=True)
class Restricted3F2Params:
    """Parameters of 3F2(a1, a2, e+1; b1, e; x)."""

    a1: Any
    a2: Any
    b1: Any
    e: Any

    def __post_init__(self) -> None:
        if not _coerce(self):
            return
        if abs(self.e) <= POLE_TOLERANCE:
            raise InvalidParameterError("e must be nonzero", parameter="e", value=self.e)
        _check_lower("b1", self.b1)
        _check_lower("e", self.e)

    def as_tuple(self) -> tuple[Any, ...]:
        return (self.a1, self.a2, self.b1, self.e)

    def to_3f2(self) -> ThreeF2Params:
        return ThreeF2Params(self.a1, self.a2, self.e + 1, self.b1, self.e)


@dataclass(frozen=True)
class EvalPolicy:
    """Controls for truncated series evaluation.

    Attributes:
        max_terms: Hard cap on the number of summed terms.
        abs_tol: Absolute term size required to stop.
        rel_tol: Term size relative to the partial sum required to stop.
        domain_margin: Fraction of the radius kept clear of the boundary.
    """

    max_terms: int = 4096
    abs_tol: float = 1e-17
    rel_tol: float = 1e-16
    domain_margin: float = 0.05

    def __post_init__(self) -> None:
        if self.max_terms < 8:
            raise InvalidParameterError(
                "max_terms must be at least 8", parameter="max_terms", value=self.max_terms
            )
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise InvalidParameterError("tolerances must be positive", parameter="abs_tol/rel_tol")
        if not 0 < self.domain_margin < 1:
            raise InvalidParameterError(
                "domain_margin must lie in (0, 1)",
                parameter="domain_margin",
                value=self.domain_margin,
            )


@dataclass(frozen=True)
class QuadraticPoly:
    """Polynomial c2*n**2 + c1*n + c0 in the recurrence index n."""

    c2: complex
    c1: complex
    c0: complex

    def __post_init__(self) -> None:
        _coerce(self)

    def __call__(self, n: complex) -> complex:
        return (self.c2 * n + self.c1) * n + self.c0

    @property
    def degree(self) -> int:
        if self.c2 != 0:
            return 2
        if self.c1 != 0:
            return 1
        return 0 if self.c0 != 0 else -1

    @classmethod
    def from_roots(cls, lead: complex, r1: complex, r2: complex) -> QuadraticPoly:
        """Build lead*(n - r1)*(n - r2)."""
        return cls(lead, -lead * (r1 + r2), lead * r1 * r2)
