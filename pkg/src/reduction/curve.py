"""Heun equations with an apparent singular point at x = a.

With epsilon = -1 (so delta = alpha + beta - gamma + 2), the point x = a is
apparent exactly when (a, q) lies on a conic. The conic is uniformized by
an auxiliary parameter e, and on it Hl collapses to 3F2(alpha, beta, e+1;
gamma, e; x).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.base.exceptions import PunctureError
from src.kernel.params import EvalPolicy, GaussParams, HeunParams, ThreeF2Params
from src.kernel.series import DEFAULT_POLICY, eval_2F1, eval_3F2, eval_Hl, gauss_coeffs, heun_coeffs

PUNCTURE_TOLERANCE = 1e-6


def punctures(alpha: complex, beta: complex, gamma: complex) -> list[complex]:
    """Finite values of e where a(e) is 0, 1 or infinite.

    e = infinity is the sixth puncture; alpha*beta/(alpha+beta-gamma+1) is
    left out when that denominator vanishes.
    """
    values = [0j, complex(gamma - 1), complex(alpha), complex(beta)]
    denom = alpha + beta - gamma + 1
    if abs(denom) > PUNCTURE_TOLERANCE:
        values.append(complex(alpha * beta / denom))
    return values


@dataclass(frozen=True)
class ApparentCurvePoint:
    """Point e of the apparent-singularity curve over fixed (alpha, beta, gamma).

    Attributes:
        a: a(e) = e(e-gamma+1)/((e-alpha)(e-beta)).
        q: q(e) = alpha beta (e+1)(e-gamma+1)/((e-alpha)(e-beta)).
    """

    alpha: complex
    beta: complex
    gamma: complex
    e: complex
    a: complex
    q: complex

    @property
    def delta(self) -> complex:
        return self.alpha + self.beta - self.gamma + 2

    @property
    def epsilon(self) -> complex:
        return -1 + 0j

    @cached_property
    def heun_params(self) -> HeunParams:
        return HeunParams(self.a, self.q, self.alpha, self.beta, self.gamma, self.delta)

    @cached_property
    def threef2_params(self) -> ThreeF2Params:
        return ThreeF2Params(self.alpha, self.beta, self.e + 1, self.gamma, self.e)


def curve_point(alpha: complex, beta: complex, gamma: complex, e: complex) -> ApparentCurvePoint:
    """Parametrize the apparent-singularity curve at e.

    Raises:
        PunctureError: e is within 1e-6 of a puncture.
    """
    alpha, beta, gamma, e = (complex(v) for v in (alpha, beta, gamma, e))
    if not np.isfinite(e):
        raise PunctureError("e must be finite", value=e, puncture="inf")
    for puncture in punctures(alpha, beta, gamma):
        if abs(e - puncture) <= PUNCTURE_TOLERANCE:
            raise PunctureError("e is a puncture of the curve", value=e, puncture=puncture)
    denom = (e - alpha) * (e - beta)
    a = e * (e - gamma + 1) / denom
    q = alpha * beta * (e + 1) * (e - gamma + 1) / denom
    return ApparentCurvePoint(alpha, beta, gamma, e, a, q)


def curve_residual(a: complex, q: complex, alpha: complex, beta: complex, gamma: complex) -> complex:
    """q^2 + [(gamma-1) - (2 alpha beta + alpha + beta) a] q + alpha beta a [(alpha beta + alpha + beta + 1) a - gamma]."""
    ab = alpha * beta
    return (
        q * q
        + ((gamma - 1) - (2 * ab + alpha + beta) * a) * q
        + ab * a * ((ab + alpha + beta + 1) * a - gamma)
    )


def curve_point_residual(cp: ApparentCurvePoint) -> float:
    """curve_residual at the point, relative to its largest term."""
    ab = cp.alpha * cp.beta
    terms = (
        cp.q * cp.q,
        ((cp.gamma - 1) - (2 * ab + cp.alpha + cp.beta) * cp.a) * cp.q,
        ab * cp.a * ((ab + cp.alpha + cp.beta + 1) * cp.a - cp.gamma),
    )
    scale = max(1.0, *(abs(t) for t in terms))
    return abs(curve_residual(cp.a, cp.q, cp.alpha, cp.beta, cp.gamma)) / scale


def relabeled(cp: ApparentCurvePoint) -> tuple[complex, complex, complex, complex, complex, complex]:
    """(a', q'; alpha', beta'; gamma', delta') of the zero-exponent solution at x = a.

    gamma' = -1, so these never form a valid HeunParams.
    """
    a_p = (cp.a - 1) / cp.a
    q_p = (-cp.q + cp.beta * cp.alpha * cp.a) / cp.a
    return a_p, q_p, cp.alpha, cp.beta, -1 + 0j, cp.gamma


def qprime_residual(cp: ApparentCurvePoint) -> complex:
    """q'^2 + [(alpha'+beta'-delta'+1) + (delta'-1) a'] q' + alpha' beta' a'."""
    a_p, q_p, al, be, _, de = relabeled(cp)
    return q_p * q_p + ((al + be - de + 1) + (de - 1) * a_p) * q_p + al * be * a_p


def apparent_row_residual(cp: ApparentCurvePoint) -> float:
    """Right side of the row determining c(2) for the relabeled parameters.

    With gamma' = -1 the c(2) coefficient of that row is zero, so a
    non-logarithmic solution exists iff the rest of the row vanishes too.
    Returns the magnitude relative to its largest term.
    """
    a_p, q_p, al, be, ga, de = relabeled(cp)
    ep = al + be - ga - de + 1
    c1 = q_p / (ga * a_p)
    middle = ((ga + de) * a_p + (ga + ep) + q_p) * c1
    row = -middle + al * be
    return abs(row) / max(1.0, abs(middle), abs(al * be))


def eval_G(cp: ApparentCurvePoint, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> complex:  # noqa: N802
    """G(alpha, beta; gamma; e; x), i.e. Hl at the curve point."""
    return eval_Hl(cp.heun_params, x, policy)


def g_equals_3f2_residual(cp: ApparentCurvePoint, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    g = eval_G(cp, x, policy)
    return abs(g - eval_3F2(cp.threef2_params, x, policy)) / max(1.0, abs(g))


def g_two_representations(
    cp: ApparentCurvePoint,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> tuple[complex, complex]:
    """G as e^-1 [xD + e] 2F1(alpha, beta; gamma; x) and as a gamma / gamma-1 combination.

    Raises:
        InvalidParameterError: gamma - 1 is a nonpositive integer.
    """
    al, be, ga, e = cp.alpha, cp.beta, cp.gamma, cp.e
    base = eval_2F1(GaussParams(al, be, ga), x, policy)
    shifted = eval_2F1(GaussParams(al + 1, be + 1, ga + 1), x, policy)
    r1 = base + al * be / (ga * e) * x * shifted
    lowered = eval_2F1(GaussParams(al, be, ga - 1), x, policy)
    r2 = (e - ga + 1) / e * base + (ga - 1) / e * lowered
    return r1, r2


def contiguity_residual(
    p: ThreeF2Params,
    x: complex,
    upper: int = 2,
    lower: int = 0,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Relative residual of a F(a+) - (b-1) F(b-) = (a-b+1) F for upper slot a and lower slot b."""
    uppers = list(p.upper)
    lowers = list(p.lower)
    a, b = uppers[upper], lowers[lower]
    raised = uppers.copy()
    raised[upper] = a + 1
    dropped = lowers.copy()
    dropped[lower] = b - 1
    f = eval_3F2(p, x, policy)
    f_up = eval_3F2(ThreeF2Params(*raised, *lowers), x, policy)
    f_down = eval_3F2(ThreeF2Params(*uppers, *dropped), x, policy)
    lhs = a * f_up - (b - 1) * f_down
    rhs = (a - b + 1) * f
    return abs(lhs - rhs) / max(1.0, abs(rhs), abs(a * f_up))


def curve_contiguity_residual(cp: ApparentCurvePoint, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Contiguity at (alpha, beta, e; gamma, e), raising e and lowering gamma."""
    p = ThreeF2Params(cp.alpha, cp.beta, cp.e, cp.gamma, cp.e)
    return contiguity_residual(p, x, upper=2, lower=0, policy=policy)


def heun_to_gauss_params(g: GaussParams, a: complex) -> HeunParams:
    """Hl(a, alpha beta a; alpha, beta; gamma, alpha+beta-gamma+1; x), which equals 2F1(alpha, beta; gamma; x)."""
    return HeunParams(a, g.alpha * g.beta * a, g.alpha, g.beta, g.gamma, g.alpha + g.beta - g.gamma + 1)


def heun_to_gauss_residual(
    g: GaussParams,
    a: complex,
    x: complex,
    n_terms: int = 32,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Largest of the coefficient-wise and the pointwise mismatch between Hl and 2F1."""
    hp = heun_to_gauss_params(g, a)
    hc = heun_coeffs(hp, n_terms - 1).coeffs
    gc = gauss_coeffs(g, n_terms - 1).coeffs
    coeff_residual = float(np.max(np.abs(hc - gc) / np.maximum(1.0, np.abs(gc))))
    value = eval_2F1(g, x, policy)
    point_residual = abs(eval_Hl(hp, x, policy) - value) / max(1.0, abs(value))
    return max(coeff_residual, point_residual)
