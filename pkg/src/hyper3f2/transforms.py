"""Pfaff-like and Euler-like transformations of 3F2(a1, a2, e+1; b1, e; x).

Both move e by a lower-triangular Möbius map e -> A e/(C e + D), and
together they generate an order-4 group; adding a1 <-> a2 gives order 8.
"""

from __future__ import annotations

from typing import Any

from src.base.exceptions import InvalidParameterError, SingularMapError
from src.kernel.params import EvalPolicy, Restricted3F2Params, is_numeric
from src.kernel.series import DEFAULT_POLICY, eval_3F2
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

MAP_TOLERANCE = 1e-10


def _evaluate(p: Restricted3F2Params, x: complex, policy: EvalPolicy) -> complex:
    return eval_3F2(p.to_3f2(), x, policy)


THREEF2_FAMILY = RuleFamily(
    name="3f2",
    points=GAUSS_POINTS,
    function="3F2",
    evaluate=_evaluate,
    radius=lambda _: 1.0,
    locate=locate_fixed,
    theta=None,
    unpack=lambda p: (p.a1, p.a2, p.e + 1, p.b1, p.e),
    pack=Restricted3F2Params,
    symbols=("a1", "a2", "b1", "e"),
)


def pfaff_e_map(p: Restricted3F2Params) -> MobiusMap:
    """e -> (b1 - a2 - 1) e/(e - a2)."""
    return MobiusMap(p.b1 - p.a2 - 1, 0, 1, -p.a2)


def euler_e_map(p: Restricted3F2Params) -> MobiusMap:
    """e -> (b1-a1-1)(b1-a2-1) e/((b1-a1-a2-1) e + a1 a2)."""
    a1, a2, b1 = p.a1, p.a2, p.b1
    return MobiusMap((b1 - a1 - 1) * (b1 - a2 - 1), 0, b1 - a1 - a2 - 1, a1 * a2)


def _numeric(p: Restricted3F2Params) -> bool:
    return all(is_numeric(v) for v in p.as_tuple())


def _move_e(
    p: Restricted3F2Params,
    coeffs: tuple[Any, Any, Any, Any],
    a1: Any,
    a2: Any,
) -> Restricted3F2Params:
    """Apply e -> A e/(C e + D) and rebuild the parameters, rejecting singular outcomes."""
    big_a, _, big_c, big_d = coeffs
    if not _numeric(p):
        return Restricted3F2Params(a1, a2, p.b1, big_a * p.e / (big_c * p.e + big_d))
    scale = max(1.0, abs(big_a), abs(big_c), abs(big_d))
    if abs(big_a * big_d) <= MAP_TOLERANCE * scale * scale:
        raise SingularMapError("e-map is singular (an upper parameter vanishes)", parameter="e")
    denom = big_c * p.e + big_d
    if abs(denom) <= MAP_TOLERANCE * scale * max(1.0, abs(p.e)):
        raise SingularMapError("transformed e is infinite", parameter="e")
    try:
        return Restricted3F2Params(a1, a2, p.b1, big_a * p.e / denom)
    except InvalidParameterError as exc:
        raise SingularMapError(f"transformed parameters are inadmissible: {exc}", parameter="e") from exc


def _pfaff_params(p: Restricted3F2Params) -> Restricted3F2Params:
    b = p.b1 - p.a2 - 1
    return _move_e(p, (b, 0, 1, -p.a2), p.a1, b)


def _euler_params(p: Restricted3F2Params) -> Restricted3F2Params:
    a1, a2, b1 = p.a1, p.a2, p.b1
    coeffs = ((b1 - a1 - 1) * (b1 - a2 - 1), 0, b1 - a1 - a2 - 1, a1 * a2)
    return _move_e(p, coeffs, b1 - a1 - 1, b1 - a2 - 1)


def _swap_params(p: Restricted3F2Params) -> Restricted3F2Params:
    return Restricted3F2Params(p.a2, p.a1, p.b1, p.e)


def _rule(label: str, name: str, step: RuleStep) -> TransformRule:
    return TransformRule(SignedPermutation.parse(label, GAUSS_POINTS), THREEF2_FAMILY, (step,), (name,))


PFAFF_LIKE = _rule(
    "[1+inf+]",
    "pfaff-like",
    RuleStep(
        "pfaff-like",
        _pfaff_params,
        lambda _: MobiusMap(1, 0, 1, -1),
        (PowerFactor(lambda _: 1, lambda p: -p.a1),),
    ),
)
EULER_LIKE = _rule(
    "[1-][inf-]",
    "euler-like",
    RuleStep(
        "euler-like",
        _euler_params,
        identity_arg,
        (PowerFactor(lambda _: 1, lambda p: p.b1 - p.a1 - p.a2 - 1),),
    ),
)
SWAP_UPPER = _rule("[1+][inf-]", "swap", RuleStep("swap", _swap_params, identity_arg))


def pfaff_like(p: Restricted3F2Params) -> tuple[Restricted3F2Params, complex, MobiusMap]:
    """(p', exponent of (1-x), argument map x -> x/(x-1)).

    Raises:
        SingularMapError: e = a2, or the image parameters are inadmissible.
    """
    return _pfaff_params(p), -p.a1, MobiusMap(1, 0, 1, -1)


def euler_like(p: Restricted3F2Params) -> tuple[Restricted3F2Params, complex, MobiusMap]:
    """(p'', exponent of (1-x), identity argument map).

    Raises:
        SingularMapError: The e'' denominator vanishes or the result is inadmissible.
    """
    return _euler_params(p), p.b1 - p.a1 - p.a2 - 1, MobiusMap.identity()


def restricted_generators(include_swap: bool = False) -> list[TransformRule]:
    return [PFAFF_LIKE, EULER_LIKE, SWAP_UPPER] if include_swap else [PFAFF_LIKE, EULER_LIKE]


def restricted_group(include_swap: bool = False) -> list[TransformRule]:
    """The 4 rules generated by the Pfaff-like and Euler-like maps, or 8 with a1 <-> a2."""
    limit = coxeter_order("B", 2) if include_swap else coxeter_order("D", 2)
    return generate_group(restricted_generators(include_swap), limit)


def apply_3f2_rule(
    r: TransformRule,
    p: Restricted3F2Params,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> complex:
    return apply_rule(r, p, x, policy)


def transform_residual(
    r: TransformRule,
    p: Restricted3F2Params,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Relative mismatch between 3F2(p; x) and the rule's right-hand side."""
    lhs = _evaluate(p, x, policy)
    rhs = apply_rule(r, p, x, policy)
    return abs(lhs - rhs) / max(1.0, abs(lhs))
