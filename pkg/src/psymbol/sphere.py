"""Points of the Riemann sphere."""

from __future__ import annotations

from dataclasses import dataclass

LOCATION_TOLERANCE = 1e-10


@dataclass(frozen=True)
class SpherePoint:
    """A finite complex point or the point at infinity (``value is None``)."""

    value: complex | None

    def __post_init__(self) -> None:
        if self.value is not None:
            object.__setattr__(self, "value", complex(self.value))

    @classmethod
    def finite(cls, z: complex) -> SpherePoint:
        return cls(complex(z))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def close(self, other: SpherePoint, tol: float = LOCATION_TOLERANCE) -> bool:
        """Equality within ``tol`` (relative for large points)."""
        if self.value is None or other.value is None:
            return self.value is None and other.value is None
        return abs(self.value - other.value) <= tol * max(1.0, abs(self.value))

    def sort_key(self) -> tuple[int, float, float]:
        """Lexicographic (real, imag) order with infinity last."""
        if self.value is None:
            return (1, 0.0, 0.0)
        return (0, self.value.real, self.value.imag)

    def render(self) -> str:
        if self.value is None:
            return "inf"
        return format_complex(self.value)


INFINITY = SpherePoint(None)
ZERO = SpherePoint(0)
ONE = SpherePoint(1)


def format_complex(z: complex, digits: int = 6) -> str:
    """Compact text for a complex number (imaginary part only when nonzero)."""
    z = complex(z)
    re = f"{z.real:.{digits}g}"
    if abs(z.imag) <= 1e-14 * max(1.0, abs(z.real)):
        return re
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{abs(z.imag):.{digits}g}j"
