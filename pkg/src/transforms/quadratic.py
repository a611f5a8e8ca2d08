"""Quadratic and biquadratic transformations of Hl.

The quadratic map R(x) = A x (a - x)/(1 - x) carries the Heun equation with
singular points {0, 1, a, inf} onto one with {0, 1, a', inf} exactly when
(a, a') lies on the curve a^2 (1 - a')^2 = 16 (1 - a) a'. The curve is
rational, and the parameter t is the primary input here:

    a(t) = t (t + 8)/(t + 4)^2,  a'(t) = t^2/(t + 8)^2,  A(t) = ((t + 4)/(t + 8))^2.

The quartic map S(x) = 4 a x (1 - x)(a - x)/(a - x^2)^2 has a' = a and
yields the biquadratic rule and the duplication formula of H(a, q; x).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from src.base.exceptions import DomainError, InvalidParameterError, PunctureError
from src.kernel.params import EvalPolicy, HeunParams
from src.kernel.series import DEFAULT_POLICY, eval_Hl
from src.psymbol.branching import (
    biquadratic_branching,
    biquadratic_map,
    quadratic_branching,
    quadratic_map,
)
from src.psymbol.calculus import f_homotopy, rational_lift
from src.psymbol.sphere import ONE, SpherePoint
from src.psymbol.standard import he_symbol
from src.psymbol.symbol import PSymbol

CURVE_TOLERANCE = 1e-10
T_PUNCTURES = (0.0, -4.0, -8.0)
_PUNCTURE_TOLERANCE = 1e-10

SForm = Literal["product", "one-minus", "a-minus"]


def constraint_residual(a: complex, a_prime: complex) -> complex:
    """a^2 (1 - a')^2 - 16 (1 - a) a'."""
    return a * a * (1 - a_prime) ** 2 - 16 * (1 - a) * a_prime


def _constraint_scale(a: complex, a_prime: complex) -> float:
    return max(1.0, abs(a * a * (1 - a_prime) ** 2), abs(16 * (1 - a) * a_prime))


def relative_constraint_residual(a: complex, a_prime: complex) -> float:
    """|constraint_residual| scaled by the size of its two terms."""
    return abs(constraint_residual(a, a_prime)) / _constraint_scale(a, a_prime)


def multiplier(a: complex, a_prime: complex) -> complex:
    """A = (1 + a')/(2 (2 - a))."""
    return (1 + a_prime) / (2 * (2 - a))


@dataclass(frozen=True)
class QuadraticLiftData:
    """A point (a, a') of the quadratic constraint curve with its multiplier A.

    Attributes:
        a: Singular point of the source equation.
        a_prime: Singular point of the target equation.
        A: Multiplier of R.
        t: Curve parameter, when the point came from lift_from_t.
    """

    a: complex
    a_prime: complex
    A: complex  # noqa: N815
    t: complex | None = None

    def __post_init__(self) -> None:
        for name in ("a", "a_prime"):
            value = complex(getattr(self, name))
            if abs(value) < 1e-12 or abs(value - 1) < 1e-12:
                raise InvalidParameterError(f"{name} must avoid 0 and 1", parameter=name, value=value)
        residual = abs(constraint_residual(self.a, self.a_prime))
        if residual > CURVE_TOLERANCE * _constraint_scale(self.a, self.a_prime):
            raise InvalidParameterError(
                "(a, a') is off the quadratic constraint curve", parameter="a_prime", value=self.a_prime
            )

    @property
    def source_radius(self) -> float:
        return min(1.0, abs(self.a))

    @property
    def target_radius(self) -> float:
        return min(1.0, abs(self.a_prime))


def lift_from_t(t: complex) -> QuadraticLiftData:
    """Point of the constraint curve at parameter t.

    Raises:
        PunctureError: t is one of 0, -4, -8.
    """
    t = complex(t)
    if not np.isfinite(t):
        raise PunctureError("t must be finite", value=t, puncture="inf")
    for puncture in T_PUNCTURES:
        if abs(t - puncture) <= _PUNCTURE_TOLERANCE:
            raise PunctureError("t is an excluded value of the curve parameter", value=t, puncture=puncture)
    a = t * (t + 8) / (t + 4) ** 2
    a_prime = t * t / (t + 8) ** 2
    big_a = ((t + 4) / (t + 8)) ** 2
    return QuadraticLiftData(a, a_prime, big_a, t)


def quad_map_R(d: QuadraticLiftData, x: complex) -> complex:  # noqa: N802
    """R(x) = A x (a - x)/(1 - x).

    Raises:
        DomainError: x is the pole x = 1.
    """
    if abs(x - 1) < 1e-14:
        raise DomainError("R has a pole at x = 1", point=x)
    return d.A * x * (d.a - x) / (1 - x)


def quadratic_sides(d: QuadraticLiftData, alpha: complex, gamma: complex, q: complex) -> tuple[HeunParams, HeunParams]:
    """Parameters (left, right) of the quadratic rule."""
    left = HeunParams(d.a, q, 2 * alpha, gamma, gamma, 2 * alpha - gamma + 1)
    right = HeunParams(d.a_prime, d.A * (q - gamma * alpha * d.a), alpha, gamma - alpha, gamma, 0.5)
    return left, right


def quadratic_rule(
    d: QuadraticLiftData,
    alpha: complex,
    gamma: complex,
    q: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> tuple[complex, complex]:
    """Both sides of Hl(a, q; 2α, γ; γ, 2α-γ+1; x) = (1-x)^(-α) Hl(a', A(q-γαa); α, γ-α; γ, 1/2; R(x)).

    Raises:
        DomainError: x or R(x) leaves the convergence disk of its side.
    """
    left, right = quadratic_sides(d, alpha, gamma, q)
    lhs = eval_Hl(left, x, policy)
    rhs = (1 - x) ** (-alpha) * eval_Hl(right, quad_map_R(d, x), policy)
    return lhs, rhs


def quadratic_symbol_check(d: QuadraticLiftData, alpha: complex, gamma: complex, q: complex = 0) -> bool:
    """Lift of the right-hand symbol along R matches the left-hand symbol.

    The (1-x)^(-α) factor is absorbed by an F-homotopy at x = 1.
    """
    left, right = quadratic_sides(d, alpha, gamma, q)
    table = quadratic_branching(d.a, d.a_prime, d.A)
    lifted = rational_lift(he_symbol(right), quadratic_map(d.a, d.A), table)
    expected = f_homotopy(he_symbol(left), ONE, -alpha)
    return lifted.equivalent(expected)


def biquad_map_S(a: complex, x: complex, form: SForm = "product") -> complex:  # noqa: N802
    """S(x) in one of its three algebraic forms.

    Raises:
        DomainError: x^2 = a.
    """
    denom = (a - x * x) ** 2
    if abs(denom) < 1e-28 * max(1.0, abs(a)) ** 2:
        raise DomainError("S has a pole at x^2 = a", point=x)
    if form == "product":
        return 4 * a * x * (1 - x) * (a - x) / denom
    if form == "one-minus":
        return 1 - (a - 2 * a * x + x * x) ** 2 / denom
    if form == "a-minus":
        return a - a * (a - 2 * x + x * x) ** 2 / denom
    raise ValueError(f"unknown form {form}")


def biquad_forms_residual(a: complex, x: complex) -> float:
    """Largest disagreement between the three forms of S at x, relative."""
    values = [biquad_map_S(a, x, form) for form in ("product", "one-minus", "a-minus")]
    scale = max(1.0, *(abs(v) for v in values))
    return max(abs(values[0] - values[1]), abs(values[0] - values[2])) / scale


def biquadratic_sides(a: complex, q: complex, gamma: complex) -> tuple[HeunParams, HeunParams]:
    left = HeunParams(a, q, 2 * gamma - 1, gamma, gamma, gamma)
    right = HeunParams(a, q / 4, gamma / 2 - 0.25, gamma / 2 + 0.25, gamma, 0.5)
    return left, right


def biquadratic_rule(
    a: complex,
    q: complex,
    gamma: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> tuple[complex, complex]:
    """Both sides of Hl(a, q; 2γ-1, γ; γ, γ; x) = (1-x²/a)^(1/2-γ) Hl(a, q/4; γ/2-1/4, γ/2+1/4; γ, 1/2; S(x)).

    Raises:
        DomainError: x or S(x) leaves the convergence disk.
    """
    left, right = biquadratic_sides(a, q, gamma)
    lhs = eval_Hl(left, x, policy)
    rhs = (1 - x * x / a) ** (0.5 - gamma) * eval_Hl(right, biquad_map_S(a, x), policy)
    return lhs, rhs


def biquadratic_symbol_check(a: complex, gamma: complex, q: complex = 0) -> bool:
    """Lift along S plus F-homotopies at ±sqrt(a) reproduces the left-hand symbol."""
    left, right = biquadratic_sides(a, q, gamma)
    lifted = rational_lift(he_symbol(right), biquadratic_map(a), biquadratic_branching(a))
    root = complex(np.sqrt(complex(a)))
    shifted: PSymbol = lifted
    for x0 in (root, -root):
        shifted = f_homotopy(shifted, SpherePoint(x0), gamma - 0.5)
    return shifted.drop_ordinary().equivalent(he_symbol(left))


def h_duplication_check(
    a: complex,
    q: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Relative residual of H(a, q; x) = H(a, q/4; S(x)), H = Hl(a, q; 0, 1/2; 1/2, 1/2; .)."""
    lhs = eval_Hl(HeunParams(a, q, 0, 0.5, 0.5, 0.5), x, policy)
    rhs = eval_Hl(HeunParams(a, q / 4, 0, 0.5, 0.5, 0.5), biquad_map_S(a, x), policy)
    return abs(lhs - rhs) / max(1.0, abs(lhs))
