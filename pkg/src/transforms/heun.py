"""Transformation rules of the local Heun function Hl.

Six Möbius rules fix x = 0 and permute {1, a, inf}; together with the
F-homotopy at x = 1 they generate the order-24 group D3 of even-signed
permutations. Adding the alpha <-> beta interchange gives B3 (order 48).

The accessory parameter is threaded through the renormalized Q-bar, which
transforms under each Möbius rule by an affine map of the singular points.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from src.base.exceptions import (
    DegenerateError,
    InvalidParameterError,
    ZeroLeadingCoefficientError,
)
from src.base.logging import get_logger
from src.kernel.params import EvalPolicy, HeunParams
from src.kernel.series import (
    DEFAULT_POLICY,
    CoefficientSequence,
    eval_Hl,
    heun_coeffs,
    series_derivative,
)
from src.psymbol.maps import MobiusMap
from src.transforms.closure import generate_group
from src.transforms.rule import (
    PowerFactor,
    RuleFamily,
    RuleStep,
    TransformRule,
    apply_rule,
    identity_arg,
    identity_rule,
    locate_fixed,
)
from src.transforms.signed_permutation import HEUN_POINTS, SignedPermutation, coxeter_order

logger = get_logger(__name__)

DERIVATIVE_INDICES = 32
"""Number of coefficients compared by the derivative identity check."""


def _theta(p: HeunParams, point: str) -> complex:
    if point == "1":
        return 1 - p.delta
    if point == "a":
        return 1 - p.epsilon
    return p.beta - p.alpha


HEUN_FAMILY = RuleFamily(
    name="heun",
    points=HEUN_POINTS,
    function="Hl",
    evaluate=eval_Hl,
    radius=lambda p: p.radius,
    locate=locate_fixed,
    theta=_theta,
    unpack=HeunParams.as_tuple,
    pack=HeunParams,
    symbols=("a", "q", "alpha", "beta", "gamma", "delta"),
)


def _rule(
    label: str,
    name: str,
    params: Callable[[HeunParams], HeunParams],
    arg: Callable[[HeunParams], MobiusMap] = identity_arg,
    factors: tuple[PowerFactor, ...] = (),
) -> TransformRule:
    step = RuleStep(name, params, arg, factors)
    return TransformRule(SignedPermutation.parse(label, HEUN_POINTS), HEUN_FAMILY, (step,), (name,))


def _minus_alpha(p: HeunParams) -> complex:
    return -p.alpha


_AT_ONE = (PowerFactor(lambda _: 1, _minus_alpha),)
_AT_A = (PowerFactor(lambda p: p.a, _minus_alpha),)


def _r1(p: HeunParams) -> HeunParams:
    a, q, al, be, ga, de = p.as_tuple()
    return HeunParams(a / (a - 1), (-q + ga * al * a) / (a - 1), al, al - de + 1, ga, al - be + 1)


def _r2(p: HeunParams) -> HeunParams:
    a, q, al, be, ga, de = p.as_tuple()
    return HeunParams(1 - a, -q + ga * al, al, al - p.epsilon + 1, ga, de)


def _r3(p: HeunParams) -> HeunParams:
    a, q, al, be, ga, _ = p.as_tuple()
    return HeunParams(1 / a, q / a, al, be, ga, p.epsilon)


def _r4(p: HeunParams) -> HeunParams:
    a, q, al, be, ga, _ = p.as_tuple()
    return HeunParams(1 / (1 - a), (q - ga * al) / (a - 1), al, al - p.epsilon + 1, ga, al - be + 1)


def _r5(p: HeunParams) -> HeunParams:
    a, q, al, _, ga, de = p.as_tuple()
    return HeunParams((a - 1) / a, (-q + ga * al * a) / a, al, al - de + 1, ga, p.epsilon)


def _fhomotopy_1(p: HeunParams) -> HeunParams:
    a, q, al, be, ga, de = p.as_tuple()
    return HeunParams(a, q - (de - 1) * ga * a, be - de + 1, al - de + 1, ga, 2 - de)


def _swap(p: HeunParams) -> HeunParams:
    return p.replace(alpha=p.beta, beta=p.alpha)


MOBIUS_RULES = (
    identity_rule(HEUN_FAMILY),
    _rule("[1+inf+][a+]", "pfaff-1", _r1, lambda _: MobiusMap(1, 0, 1, -1), _AT_ONE),
    _rule("[1+][a+inf+]", "pfaff-a", _r2, lambda p: MobiusMap(1 - p.a, 0, 1, -p.a), _AT_A),
    _rule("[1+a+][inf+]", "scale", _r3, lambda p: MobiusMap(1, 0, 0, p.a)),
    _rule("[1+a+inf+]", "cycle", _r4, lambda p: MobiusMap(1, 0, 1, -p.a), _AT_A),
    _rule("[1+inf+a+]", "cycle-inverse", _r5, lambda p: MobiusMap(p.a - 1, 0, p.a, -p.a), _AT_ONE),
)

FHOMOTOPY_AT_1 = _rule(
    "[1-][a+][inf-]",
    "fhomotopy-1",
    _fhomotopy_1,
    factors=(PowerFactor(lambda _: 1, lambda p: 1 - p.delta),),
)

SWAP = _rule("[1+][a+][inf-]", "swap", _swap)


def mobius_hl_rules() -> list[TransformRule]:
    """The six Möbius rules fixing x = 0, identity first."""
    return list(MOBIUS_RULES)


def fhomotopy_hl_rule_at_1() -> TransformRule:
    """(1-x)^(1-delta) Hl(a, q-(delta-1) gamma a; beta-delta+1, alpha-delta+1; gamma, 2-delta; x)."""
    return FHOMOTOPY_AT_1


def compose_hl_rules(r1: TransformRule, r2: TransformRule) -> TransformRule:
    """Rule applying r1 first, then r2 at r1's transformed parameters."""
    return r1.then(r2)


def hl_generators(include_swap: bool = False) -> list[TransformRule]:
    generators = [*MOBIUS_RULES[1:], FHOMOTOPY_AT_1]
    if include_swap:
        generators.append(SWAP)
    return generators


def mobius_group() -> list[TransformRule]:
    """Closure of the Möbius rules alone (order 6)."""
    return generate_group(MOBIUS_RULES[1:], math.factorial(3))


def generate_hl_group(include_swap: bool = False) -> list[TransformRule]:
    """All 24 rules of D3, or 48 of B3 when alpha <-> beta is a generator.

    Raises:
        ClosureOverflowError: The closure outgrew the Coxeter group order.
    """
    limit = coxeter_order("B", 3) if include_swap else coxeter_order("D", 3)
    return generate_group(hl_generators(include_swap), limit)


def apply_hl_rule(
    r: TransformRule,
    p: HeunParams,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> complex:
    """prefactor(p, x) * Hl(param_map(p); arg_map(p)(x))."""
    return apply_rule(r, p, x, policy)


@dataclass(frozen=True)
class QBar:
    """Renormalized accessory parameter."""

    value: complex


def qbar_of(p: HeunParams) -> QBar:
    """Q-bar = [beta Q + (eps - beta) a + (delta - beta)] / (alpha - gamma + 1), Q = q/(alpha beta).

    Raises:
        DegenerateError: alpha, beta or alpha - gamma + 1 vanishes.
    """
    if abs(p.alpha) < 1e-12 or abs(p.beta) < 1e-12:
        raise DegenerateError("Q-bar needs alpha and beta nonzero", reason="alpha*beta = 0")
    denom = p.alpha - p.gamma + 1
    if abs(denom) < 1e-12:
        raise DegenerateError("Q-bar needs alpha - gamma + 1 nonzero", reason="alpha-gamma+1 = 0")
    big_q = p.q / (p.alpha * p.beta)
    return QBar((p.beta * big_q + (p.epsilon - p.beta) * p.a + (p.delta - p.beta)) / denom)


def q_of_qbar(qbar: QBar, p: HeunParams) -> complex:
    """Accessory parameter q recovered from Q-bar and the other parameters of p."""
    return p.alpha * (
        (p.alpha - p.gamma + 1) * qbar.value - (p.epsilon - p.beta) * p.a - (p.delta - p.beta)
    )


AFFINE_SHADOWS: dict[str, Callable[[complex, complex], complex]] = {
    "[1+][a+][inf+]": lambda qb, a: qb,
    "[1+inf+][a+]": lambda qb, a: (a - qb) / (a - 1),
    "[1+][a+inf+]": lambda qb, a: 1 - qb,
    "[1+a+][inf+]": lambda qb, a: qb / a,
    "[1+a+inf+]": lambda qb, a: (1 - qb) / (1 - a),
    "[1+inf+a+]": lambda qb, a: (a - qb) / a,
}
"""Affine map of Q-bar induced by each Möbius rule, keyed by label."""


def qbar_naturality_residual(r: TransformRule, p: HeunParams) -> float:
    """|Q-bar(param_map(p)) - shadow(Q-bar(p))| relative, for a Möbius rule."""
    shadow = AFFINE_SHADOWS[r.name]
    expected = shadow(qbar_of(p).value, p.a)
    actual = qbar_of(r.param_map(p)).value
    return abs(actual - expected) / max(1.0, abs(expected))


def local_solution_at_a(
    p: HeunParams,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> complex:
    """Zero-exponent solution of the HE at x = a, normalized to 1 there."""
    return eval_Hl(solution_at_a_params(p), (p.a - x) / p.a, policy)


def solution_at_a_params(p: HeunParams) -> HeunParams:
    """Parameters of the Hl whose argument is (a - x)/a in the x = a local solution."""
    a, q, al, be, ga, de = p.as_tuple()
    return HeunParams((a - 1) / a, (-q + be * al * a) / a, al, be, p.epsilon, ga)


def series_jet(coeffs: np.ndarray, u: complex) -> tuple[complex, complex, complex]:
    """Value, first and second derivative of a truncated series at u."""
    poly = Polynomial(coeffs)
    return complex(poly(u)), complex(poly.deriv(1)(u)), complex(poly.deriv(2)(u))


def he_operator_jet_residual(
    p: HeunParams,
    jet: tuple[complex, complex, complex],
    x: complex,
) -> float:
    """Relative residual of the Heun operator applied to (y, y', y'') at x."""
    y, dy, d2y = jet
    a = p.a
    first = (p.gamma / x + p.delta / (x - 1) + p.epsilon / (x - a)) * dy
    zeroth = (p.alpha * p.beta * x - p.q) / (x * (x - 1) * (x - a)) * y
    scale = max(abs(d2y), abs(first), abs(zeroth), 1e-300)
    return abs(d2y + first + zeroth) / scale


def he_operator_residual(p: HeunParams, coeffs: CoefficientSequence, x: complex) -> float:
    """Heun-operator residual of a truncated Hl series at x."""
    return he_operator_jet_residual(p, series_jet(coeffs.coeffs, x), x)


def local_solution_residual(p: HeunParams, x: complex, n_terms: int = 256) -> float:
    """Heun-operator residual of the x = a local solution at x."""
    pa = solution_at_a_params(p)
    u = (p.a - x) / p.a
    h, dh, d2h = series_jet(heun_coeffs(pa, n_terms).coeffs, u)
    # chain rule for u = (a - x)/a
    jet = (h, -dh / p.a, d2h / (p.a * p.a))
    return he_operator_jet_residual(p, jet, x)


def derivative_qprime(p: HeunParams, N: int) -> complex:  # noqa: N803
    """q' = q + N(N-1)(a+1) + N[(a+1) gamma + a delta + eps]."""
    return p.q + N * (N - 1) * (p.a + 1) + N * ((p.a + 1) * p.gamma + p.a * p.delta + p.epsilon)


def derivative_target(p: HeunParams, N: int) -> HeunParams:  # noqa: N803
    """Parameters (a, q'; 1+N, beta+N; gamma+N, delta+N) of the differentiated function."""
    return HeunParams(p.a, derivative_qprime(p, N), 1 + N, p.beta + N, p.gamma + N, p.delta + N)


def derivative_identity_check(
    p: HeunParams,
    N: int,  # noqa: N803
    policy: EvalPolicy = DEFAULT_POLICY,
) -> tuple[complex, float]:
    """Compare D^N Hl(p) with a multiple of Hl(derivative_target(p, N)) coefficient-wise.

    The residual is the largest per-coefficient relative difference; pairs
    of coefficients both below policy.abs_tol count as equal.

    Returns:
        (constant, max_residual) with constant = N! c(N).

    Raises:
        InvalidParameterError: alpha is not 1 - N.
        ZeroLeadingCoefficientError: The constant vanishes.
    """
    if N < 0 or abs(p.alpha - (1 - N)) > 1e-12:
        raise InvalidParameterError("alpha must equal 1 - N", parameter="alpha", value=p.alpha)
    if N == 0:
        return 1 + 0j, 0.0
    k = DERIVATIVE_INDICES
    lhs = series_derivative(heun_coeffs(p, k + N - 1), N).coeffs
    constant = complex(lhs[0])
    if abs(constant) <= 1e-300:
        raise ZeroLeadingCoefficientError("N! c(N) vanishes; proportionality constant undefined")
    rhs = heun_coeffs(derivative_target(p, N), k - 1).coeffs
    scaled = constant * rhs
    scale = np.maximum(np.maximum(np.abs(lhs), np.abs(scaled)), policy.abs_tol)
    residual = float(np.max(np.abs(lhs - scaled) / scale))
    logger.debug("Derivative identity", N=N, residual=residual)
    return constant, residual
