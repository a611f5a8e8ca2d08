"""Kummer-group rules of 2F1 that fix x = 0.

The Klein four-group {identity, Euler, Pfaff, twisted Pfaff} is generated
by Euler and Pfaff; adding alpha <-> beta gives the order-8 group B2.
"""

from __future__ import annotations

from collections.abc import Callable

from src.kernel.params import EvalPolicy, GaussParams
from src.kernel.series import DEFAULT_POLICY, eval_2F1
from src.psymbol.maps import MobiusMap
from src.transforms.closure import generate_group
from src.transforms.rule import (
    PowerFactor,
    RuleFamily,
    RuleStep,
    TransformRule,
    apply_rule,
    identity_arg,
    locate_fixed,
)
from src.transforms.signed_permutation import GAUSS_POINTS, SignedPermutation, coxeter_order


def _theta(p: GaussParams, point: str) -> complex:
    if point == "1":
        return p.gamma - p.alpha - p.beta
    return p.beta - p.alpha


GAUSS_FAMILY = RuleFamily(
    name="gauss",
    points=GAUSS_POINTS,
    function="2F1",
    evaluate=eval_2F1,
    radius=lambda _: 1.0,
    locate=locate_fixed,
    theta=_theta,
    unpack=GaussParams.as_tuple,
    pack=GaussParams,
    symbols=("alpha", "beta", "gamma"),
)


def _pfaff_arg(_: GaussParams) -> MobiusMap:
    return MobiusMap(1, 0, 1, -1)


def _at_one(exponent: Callable[[GaussParams], complex]) -> tuple[PowerFactor, ...]:
    return (PowerFactor(lambda _: 1, exponent),)


def _rule(
    label: str,
    name: str,
    params: Callable[[GaussParams], GaussParams],
    arg: Callable[[GaussParams], MobiusMap] = identity_arg,
    factors: tuple[PowerFactor, ...] = (),
) -> TransformRule:
    step = RuleStep(name, params, arg, factors)
    return TransformRule(SignedPermutation.parse(label, GAUSS_POINTS), GAUSS_FAMILY, (step,), (name,))


def _excess(p: GaussParams) -> complex:
    return p.gamma - p.alpha - p.beta


IDENTITY = TransformRule(SignedPermutation.identity(GAUSS_POINTS), GAUSS_FAMILY, (), ())
EULER = _rule(
    "[1-][inf-]",
    "euler",
    lambda p: GaussParams(p.gamma - p.alpha, p.gamma - p.beta, p.gamma),
    factors=_at_one(_excess),
)
PFAFF = _rule(
    "[1+inf+]",
    "pfaff",
    lambda p: GaussParams(p.alpha, p.gamma - p.beta, p.gamma),
    _pfaff_arg,
    _at_one(lambda p: -p.alpha),
)
TWISTED_PFAFF = _rule(
    "[1-inf-]",
    "twisted-pfaff",
    lambda p: GaussParams(p.gamma - p.alpha, p.beta, p.gamma),
    _pfaff_arg,
    _at_one(lambda p: -p.beta),
)
SWAP = _rule("[1+][inf-]", "swap", lambda p: GaussParams(p.beta, p.alpha, p.gamma))

_SECOND_HALF = (
    SWAP,
    _rule(
        "[1-][inf+]",
        "euler-swap",
        lambda p: GaussParams(p.gamma - p.beta, p.gamma - p.alpha, p.gamma),
        factors=_at_one(_excess),
    ),
    _rule(
        "[1+inf-]",
        "pfaff-swap",
        lambda p: GaussParams(p.beta, p.gamma - p.alpha, p.gamma),
        _pfaff_arg,
        _at_one(lambda p: -p.beta),
    ),
    _rule(
        "[1-inf+]",
        "twisted-pfaff-swap",
        lambda p: GaussParams(p.gamma - p.beta, p.alpha, p.gamma),
        _pfaff_arg,
        _at_one(lambda p: -p.alpha),
    ),
)


def kummer_rules(include_swap: bool = False) -> list[TransformRule]:
    """The 4 rules of the D2 quadruple, or all 8 of B2 with alpha <-> beta."""
    rules = [IDENTITY, EULER, PFAFF, TWISTED_PFAFF]
    if include_swap:
        rules.extend(_SECOND_HALF)
    return rules


def gauss_generators(include_swap: bool = False) -> list[TransformRule]:
    return [EULER, PFAFF, SWAP] if include_swap else [EULER, PFAFF]


def kummer_group(include_swap: bool = False) -> list[TransformRule]:
    """Closure of the Euler and Pfaff generators (and the swap)."""
    limit = coxeter_order("B", 2) if include_swap else coxeter_order("D", 2)
    return generate_group(gauss_generators(include_swap), limit)


def apply_gauss_rule(
    r: TransformRule,
    p: GaussParams,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> complex:
    """prefactor(p, x) * 2F1(param_map(p); arg_map(x))."""
    return apply_rule(r, p, x, policy)


def compose_gauss_rules(r1: TransformRule, r2: TransformRule) -> TransformRule:
    """Rule applying r1 first, then r2 at r1's transformed parameters."""
    return r1.then(r2)
