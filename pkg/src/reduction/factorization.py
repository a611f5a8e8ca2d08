"""Operator factorizations on the apparent-singularity curve.

Difference side: the second-order Heun recurrence equals

    1/(n+e+1) {a E - 1} {(n+gamma)(n+e)(n+1) E - (n+alpha)(n+beta)(n+e+1)},

with E the shift n -> n+1. Differential side: the Clausen operator of
3F2(alpha, beta, e+1; gamma, e) equals {D + (e+1)/x + 1/(x-1) + 1/(x-a)}
composed with the Heun operator. Both are checked by comparing polynomial
coefficients at enough sample points to pin down the identity.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from src.base.exceptions import DegenerateError, ShapeError
from src.kernel.params import HeunParams
from src.reduction.curve import ApparentCurvePoint

X = Polynomial([0, 1])


def heun_recurrence_row(p: HeunParams, n: float) -> tuple[complex, complex, complex]:
    """Coefficients of E^2, E^1, E^0 in the Heun recurrence at index n."""
    a, q, al, be, ga, de = p.as_tuple()
    e2 = (n + ga + 1) * (n + 2) * a
    e1 = -((n + 1) * (n + ga + de) * a + (n + 1) * (n + ga + p.epsilon) + q)
    e0 = (n + al) * (n + be)
    return e2, e1, e0


def factored_recurrence_row(cp: ApparentCurvePoint, n: float) -> tuple[complex, complex, complex]:
    """E^2, E^1, E^0 coefficients of the expanded product of the two difference operators."""
    al, be, ga, e = cp.alpha, cp.beta, cp.gamma, cp.e
    if abs(n + e + 1) < 1e-12:
        raise DegenerateError("n + e + 1 vanishes at a sample", reason=f"n = {n}")
    lead = e * (e - ga + 1) / ((e - al) * (e - be))

    def right(m: float) -> tuple[complex, complex]:
        return (m + ga) * (m + e) * (m + 1), -(m + al) * (m + be) * (m + e + 1)

    r1_next, r0_next = right(n + 1)
    r1, r0 = right(n)
    scale = 1 / (n + e + 1)
    return scale * lead * r1_next, scale * (lead * r0_next - r1), scale * (-r0)


def difference_factorization_residual(
    cp: ApparentCurvePoint,
    n_samples: Sequence[int] = range(7),
    heun: HeunParams | None = None,
    relative: bool = True,
) -> float:
    """Largest mismatch between the factored product and the Heun recurrence.

    Args:
        cp: Curve point supplying both factors.
        n_samples: Indices at which the coefficients are compared.
        heun: Heun parameters of the recurrence, defaulting to the curve
            point's own; pass perturbed ones for an off-curve control.
        relative: Scale each row's mismatch by its largest coefficient.

    Raises:
        DegenerateError: n + e + 1 = 0 at a sample.
    """
    heun = heun or cp.heun_params
    worst = 0.0
    for n in n_samples:
        lhs = np.array(factored_recurrence_row(cp, n))
        rhs = np.array(heun_recurrence_row(heun, n))
        diff = float(np.max(np.abs(lhs - rhs)))
        if relative:
            diff /= max(1.0, float(np.max(np.abs(rhs))))
        worst = max(worst, diff)
    return worst


def _without(factors: dict[complex, int], point: complex, power: int) -> Polynomial:
    """W / (x - point)^power, W = prod (x - z)^k over ``factors``."""
    poly = Polynomial([1])
    remaining = dict(factors)
    remaining[point] -= power
    if remaining[point] < 0:
        raise ShapeError("denominator not covered by the common multiple")
    for z, k in remaining.items():
        for _ in range(k):
            poly = poly * Polynomial([-z, 1])
    return poly


def _operator_polys(
    cp: ApparentCurvePoint,
    heun: HeunParams,
) -> tuple[list[Polynomial], list[Polynomial]]:
    """Coefficients of D^3..D^0 of both operators, multiplied by W = x^2 (x-1)^2 (x-a)^2."""
    a = cp.a
    points = {0j: 2, 1 + 0j: 2, complex(a): 2}
    w = _without(points, 0j, 0)

    def simple(terms: list[tuple[complex, complex]], power: int = 1) -> Polynomial:
        result = Polynomial([0])
        for coeff, z in terms:
            result = result + coeff * _without(points, complex(z), power)
        return result

    ga, de, ep = heun.gamma, heun.delta, heun.epsilon
    p_terms = [(ga, 0), (de, 1), (ep, a)]
    r_terms = [(cp.e + 1, 0), (1, 1), (1, a)]
    numer = Polynomial([-heun.q, heun.alpha * heun.beta])
    denom = X * (X - 1) * (X - heun.a)

    w_p_plus_r = simple(p_terms) + simple(r_terms)
    w_dp = -simple(p_terms, power=2)
    w_q = numer * (w // denom)
    w_dq = numer.deriv() * denom - numer * denom.deriv()
    w_rp = Polynomial([0])
    w_rq = Polynomial([0])
    for rc, rz in r_terms:
        for pc, pz in p_terms:
            part = _without(points, complex(rz), 1)
            w_rp = w_rp + rc * pc * (part // Polynomial([-pz, 1]))
        w_rq = w_rq + rc * numer * (_without(points, complex(rz), 1) // denom)
    composed = [w, w_p_plus_r, w_dp + w_q + w_rp, w_dq + w_rq]

    a1, a2, a3 = cp.threef2_params.upper
    b1, b2 = cp.threef2_params.lower
    x2x1 = _without(points, 0j, 2) // (X - 1)
    xx1 = _without(points, 0j, 1) // (X - 1)
    clausen = [
        w,
        (a1 + a2 + a3 + 3) * _without(points, 1 + 0j, 1) - (b1 + b2 + 1) * xx1,
        (a1 * a2 + a2 * a3 + a3 * a1 + a1 + a2 + a3 + 1) * xx1 - b1 * b2 * x2x1,
        a1 * a2 * a3 * x2x1,
    ]
    return composed, clausen


def _apply(coeffs: list[Polynomial], k: int) -> np.ndarray:
    monomial = Polynomial([0] * k + [1])
    total = Polynomial([0])
    for order, coeff in zip(range(3, -1, -1), coeffs):
        total = total + coeff * monomial.deriv(order)
    return total.coef


def differential_factorization_residual(
    cp: ApparentCurvePoint,
    k_max: int = 6,
    heun: HeunParams | None = None,
) -> float:
    """Largest relative mismatch of the two third-order operators on x^0..x^k_max.

    Raises:
        ShapeError: k_max < 3.
    """
    if k_max < 3:
        raise ShapeError("k_max must be at least 3", expected=">= 3", actual=str(k_max))
    composed, clausen = _operator_polys(cp, heun or cp.heun_params)
    worst = 0.0
    for k in range(k_max + 1):
        lhs = _apply(composed, k)
        rhs = _apply(clausen, k)
        size = max(len(lhs), len(rhs))
        lhs = np.pad(lhs, (0, size - len(lhs)))
        rhs = np.pad(rhs, (0, size - len(rhs)))
        scale = max(1.0, float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))) / scale)
    return worst
