"""Recognize 2F1 and Hl behind recurrences with quadratic coefficients.

A two-term recurrence P1(n) c(n+1) + P0(n) c(n) = 0 whose generating
function is C * 2F1(alpha, beta; gamma; A x), and a three-term one
P2(n) c(n+2) + P1(n) c(n+1) + P0(n) c(n) = 0 whose generating function is
C * Hl(a, q; alpha, beta; gamma, delta; A x).
"""

from __future__ import annotations

import numpy as np

from src.base.exceptions import DegenerateError, ShapeError
from src.base.logging import get_logger
from src.kernel.params import GaussParams, HeunParams, QuadraticPoly, is_nonpositive_integer

logger = get_logger(__name__)

ROOT_TOLERANCE = 1e-10
"""Relative tolerance for root checks and for confluent characteristic roots."""


def _canonical_pair(r1: complex, r2: complex) -> tuple[complex, complex]:
    first, second = sorted((complex(r1), complex(r2)), key=lambda z: (z.real, z.imag))
    return first, second


def _negated_roots(p: QuadraticPoly) -> tuple[complex, complex]:
    if p.degree != 2:
        raise ShapeError("P0 must have degree 2", expected="degree 2", actual=f"degree {p.degree}")
    r1, r2 = np.roots([p.c2, p.c1, p.c0])
    return _canonical_pair(-r1, -r2)


def _scale(p: QuadraticPoly) -> float:
    return max(abs(p.c2), abs(p.c1), abs(p.c0))


def _require_root(p: QuadraticPoly, root: int, name: str) -> None:
    if p.degree != 2:
        raise ShapeError(f"{name} must have degree 2", expected="degree 2", actual=f"degree {p.degree}")
    if abs(p(root)) > ROOT_TOLERANCE * _scale(p):
        raise ShapeError(
            f"{name} must vanish at n={root}", expected="0", actual=str(p(root))
        )


def classify_2term(P1: QuadraticPoly, P0: QuadraticPoly) -> tuple[complex, GaussParams]:  # noqa: N803
    """Recover (A, GaussParams) from a two-term recurrence.

    -P0(n)/P1(n) must equal A (n+alpha)(n+beta) / ((n+gamma)(n+1)).
    (alpha, beta) come back sorted by (real, imag).

    Raises:
        ShapeError: P1(-1) != 0, a degree is wrong, or gamma would be a
            nonpositive integer.
    """
    _require_root(P1, -1, "P1")
    gamma = P1.c1 / P1.c2 - 1
    if is_nonpositive_integer(gamma):
        raise ShapeError(
            "other root of P1 must not be an integer > -1", expected="gamma off poles", actual=str(gamma)
        )
    A = -P0.c2 / P1.c2  # noqa: N806
    alpha, beta = _negated_roots(P0)
    return A, GaussParams(alpha, beta, gamma)


def forward_2term(A: complex, p: GaussParams) -> tuple[QuadraticPoly, QuadraticPoly]:  # noqa: N803
    """Recurrence polynomials (P1, P0) of the coefficients of 2F1(p; A x)."""
    P1 = QuadraticPoly.from_roots(1, -p.gamma, -1)  # noqa: N806
    P0 = QuadraticPoly.from_roots(-A, -p.alpha, -p.beta)  # noqa: N806
    return P1, P0


def classify_3term(
    P2: QuadraticPoly,  # noqa: N803
    P1: QuadraticPoly,  # noqa: N803
    P0: QuadraticPoly,  # noqa: N803
) -> tuple[complex, HeunParams]:
    """Recover (A, HeunParams) from a three-term recurrence.

    The characteristic polynomial p22 z**2 + p12 z + p02 has roots {A, A/a}.
    Of the two assignments the one with |a| >= 1 wins; when both give
    |a| = 1 the lexicographically smaller a is taken.

    Raises:
        ShapeError: P2(-2) != 0, a degree is wrong, or gamma would be a
            nonpositive integer.
        DegenerateError: The characteristic roots coincide (confluent case).
    """
    _require_root(P2, -2, "P2")
    p22, p12, p02 = P2.c2, P1.c2, P0.c2
    disc = p12 * p12 - 4 * p22 * p02
    if abs(disc) <= ROOT_TOLERANCE * max(abs(p12) ** 2, abs(4 * p22 * p02)):
        raise DegenerateError("characteristic roots coincide", reason="confluent")
    root = np.sqrt(complex(disc))
    z1, z2 = (-p12 + root) / (2 * p22), (-p12 - root) / (2 * p22)
    if z1 == 0 or z2 == 0:
        raise DegenerateError("characteristic root is zero", reason="zero root")

    options = [(complex(z1), complex(z1 / z2)), (complex(z2), complex(z2 / z1))]
    big = [opt for opt in options if abs(opt[1]) >= 1 - ROOT_TOLERANCE]
    if len(big) == 1:
        A, a = big[0]  # noqa: N806
    else:
        A, a = min(options, key=lambda opt: (opt[1].real, opt[1].imag))  # noqa: N806

    s = P2.c2 / a
    gamma = P2.c1 / P2.c2 - 3
    if is_nonpositive_integer(gamma):
        raise ShapeError("other root of P2 must not be an integer > -2", actual=str(gamma))
    alpha, beta = _negated_roots(P0)
    u1 = -P1.c1 / (s * A)
    u0 = -P1.c0 / (s * A)
    q = u0 - u1 + a + 1
    delta = (u1 - (a + 1) - gamma * a - alpha - beta - 1) / (a - 1)
    logger.debug("Classified three-term recurrence", A=A, a=a)
    return A, HeunParams(a, q, alpha, beta, gamma, delta)


def forward_3term(
    A: complex,  # noqa: N803
    p: HeunParams,
    scale: complex = 1,
) -> tuple[QuadraticPoly, QuadraticPoly, QuadraticPoly]:
    """Recurrence polynomials (P2, P1, P0) of the coefficients of Hl(p; A x), times scale."""
    a, q, gamma, delta, eps = p.a, p.q, p.gamma, p.delta, p.epsilon
    P2 = QuadraticPoly.from_roots(scale * a, -gamma - 1, -2)  # noqa: N806
    # (n+1)(n+gamma+delta) a + (n+1)(n+gamma+eps) + q
    m2 = a + 1
    m1 = a * (1 + gamma + delta) + 1 + gamma + eps
    m0 = a * (gamma + delta) + gamma + eps + q
    k = -scale * A
    P1 = QuadraticPoly(k * m2, k * m1, k * m0)  # noqa: N806
    P0 = QuadraticPoly.from_roots(scale * A * A, -p.alpha, -p.beta)  # noqa: N806
    return P2, P1, P0
