"""Möbius and rational maps of the sphere, with branch data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.polynomial import Polynomial

from src.base.exceptions import DegenerateError, ShapeError
from src.kernel.params import is_numeric
from src.psymbol.sphere import INFINITY, LOCATION_TOLERANCE, SpherePoint

_RELATIVE_ZERO = 1e-14


@dataclass(frozen=True)
class MobiusMap:
    """x -> (a x + b) / (c x + d) with ad - bc != 0.

    Coefficients may be sympy expressions; the determinant check only runs
    for numeric coefficients.
    """

    a: Any
    b: Any
    c: Any
    d: Any

    def __post_init__(self) -> None:
        coeffs = (self.a, self.b, self.c, self.d)
        if all(is_numeric(v) for v in coeffs):
            a, b, c, d = (complex(v) for v in coeffs)
            for name, value in zip("abcd", (a, b, c, d)):
                object.__setattr__(self, name, value)
            scale = max(abs(a), abs(b), abs(c), abs(d))
            if scale == 0 or abs(a * d - b * c) <= _RELATIVE_ZERO * scale * scale:
                raise DegenerateError("Möbius map has zero determinant", reason="ad - bc = 0")

    @classmethod
    def identity(cls) -> MobiusMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def sending(cls, z1: SpherePoint, z2: SpherePoint, z3: SpherePoint) -> MobiusMap:
        """The unique map with z1 -> 0, z2 -> 1, z3 -> infinity."""
        if z1.is_infinite or z2.is_infinite:
            raise ShapeError("z1 and z2 must be finite")
        p1, p2 = complex(z1.value), complex(z2.value)  # type: ignore[arg-type]
        if z3.is_infinite:
            return cls(1, -p1, 0, p2 - p1)
        p3 = complex(z3.value)  # type: ignore[arg-type]
        # (x - p1)(p2 - p3) / ((x - p3)(p2 - p1))
        return cls(p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1))

    @property
    def determinant(self) -> Any:
        return self.a * self.d - self.b * self.c

    def __call__(self, x: Any) -> Any:
        return (self.a * x + self.b) / (self.c * x + self.d)

    def evaluate(self, x: Any) -> Any:
        return self(x)

    def apply(self, point: SpherePoint) -> SpherePoint:
        """Image of a sphere point, with infinity handled explicitly."""
        if point.is_infinite:
            if abs(self.c) <= _RELATIVE_ZERO * max(abs(self.a), abs(self.c)):
                return INFINITY
            return SpherePoint(self.a / self.c)
        z = complex(point.value)  # type: ignore[arg-type]
        den = self.c * z + self.d
        scale = max(abs(self.c * z), abs(self.d), 1.0)
        if abs(den) <= LOCATION_TOLERANCE * scale:
            return INFINITY
        return SpherePoint((self.a * z + self.b) / den)

    def inverse(self) -> MobiusMap:
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other: MobiusMap) -> MobiusMap:
        """self ∘ other, i.e. x -> self(other(x))."""
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def fixes_zero(self) -> bool:
        return abs(self.b) <= _RELATIVE_ZERO * max(abs(self.a), abs(self.b), abs(self.d))


@dataclass(frozen=True, eq=False)
class RationalMap:
    """x -> N(x) / D(x) with coprime numerator and denominator."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        num = Polynomial(np.asarray(self.numerator.coef, dtype=complex)).trim()
        den = Polynomial(np.asarray(self.denominator.coef, dtype=complex)).trim()
        if not np.any(den.coef):
            raise DegenerateError("denominator is identically zero")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)
        for r in num.roots() if num.degree() > 0 else []:
            for s in den.roots() if den.degree() > 0 else []:
                if abs(r - s) <= LOCATION_TOLERANCE * max(1.0, abs(r)):
                    raise DegenerateError("numerator and denominator share a root", reason=str(r))

    @classmethod
    def from_mobius(cls, m: MobiusMap) -> RationalMap:
        return cls(Polynomial([m.b, m.a]), Polynomial([m.d, m.c]))

    @property
    def degree(self) -> int:
        return max(self.numerator.degree(), self.denominator.degree())

    def __call__(self, x: complex) -> complex:
        return complex(self.numerator(x) / self.denominator(x))


@dataclass(frozen=True)
class BranchPoint:
    """A preimage of ``image`` with ramification ``multiplicity``."""

    preimage: SpherePoint
    image: SpherePoint
    multiplicity: int

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ShapeError("multiplicity must be positive", actual=str(self.multiplicity))
