"""Special cases of the restricted 3F2 transformations.

Setting e = -a2 in the Pfaff-like rule gives a three-parameter identity
with a nearly very well poised right side. Choosing e so that e' = a1
collapses the 3F2 to a single 2F1, which specializes to the reduction of
a very well poised 3F2 and to the alpha <-> beta involutions.
"""

from __future__ import annotations

from src.base.exceptions import InvalidParameterError
from src.kernel.params import EvalPolicy, GaussParams, Restricted3F2Params, ThreeF2Params
from src.kernel.series import DEFAULT_POLICY, eval_2F1, eval_3F2
from src.psymbol.standard import dual_third_order_symbols
from src.psymbol.symbol import EXPONENT_TOLERANCE, PSymbol

E_DENOMINATOR_GUARD = 1e-8


def _relative(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def bailey_slater_params(a1: complex, a2: complex, b1: complex) -> tuple[ThreeF2Params, ThreeF2Params]:
    """(left, right) 3F2 parameters of the e = -a2 Pfaff-like identity."""
    left = ThreeF2Params(a1, a2, -a2 + 1, b1, -a2)
    right = ThreeF2Params(a1, b1 - a2 - 1, (b1 - a2 + 1) / 2, b1, (b1 - a2 - 1) / 2)
    return left, right


def bailey_slater_check(
    a1: complex,
    a2: complex,
    b1: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """3F2(a1, a2, 1-a2; b1, -a2; x) = (1-x)^(-a1) 3F2(a1, b1-a2-1, (b1-a2+1)/2; b1, (b1-a2-1)/2; x/(x-1))."""
    left, right = bailey_slater_params(a1, a2, b1)
    lhs = eval_3F2(left, x, policy)
    rhs = (1 - x) ** (-a1) * eval_3F2(right, x / (x - 1), policy)
    return _relative(lhs, rhs)


def reduction_e(a1: complex, a2: complex, b1: complex) -> complex:
    """e(a1, a2; b1) = a1 a2/(a1 + a2 - b1 + 1)."""
    denom = a1 + a2 - b1 + 1
    if abs(denom) <= E_DENOMINATOR_GUARD:
        raise InvalidParameterError("a1 + a2 - b1 + 1 must be nonzero", parameter="b1", value=b1)
    return a1 * a2 / denom


def reduce_to_2f1(
    a1: complex,
    a2: complex,
    b1: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> tuple[complex, complex]:
    """3F2(a1, a2, e+1; b1, e; x) and (1-x) 2F1(a1+1, a2+1; b1; x) at e = e(a1, a2; b1).

    Raises:
        InvalidParameterError: e is undefined or inadmissible.
    """
    p = Restricted3F2Params(a1, a2, b1, reduction_e(a1, a2, b1))
    lhs = eval_3F2(p.to_3f2(), x, policy)
    rhs = (1 - x) * eval_2F1(GaussParams(a1 + 1, a2 + 1, b1), x, policy)
    return lhs, rhs


def very_well_poised_check(
    alpha: complex,
    beta: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """3F2(alpha, beta, alpha/2+1; alpha-beta+1, alpha/2; x) = (1-x) 2F1(alpha+1, beta+1; alpha-beta+1; x)."""
    lhs = eval_3F2(ThreeF2Params(alpha, beta, alpha / 2 + 1, alpha - beta + 1, alpha / 2), x, policy)
    rhs = (1 - x) * eval_2F1(GaussParams(alpha + 1, beta + 1, alpha - beta + 1), x, policy)
    return _relative(lhs, rhs)


def family_params(alpha: complex, beta: complex, s: complex, t: complex) -> ThreeF2Params:
    """3F2 parameters of the (s, t) family that is stable under alpha <-> beta.

    Raises:
        InvalidParameterError: alpha - beta - 1/2 vanishes.
    """
    guard = alpha - beta - 0.5
    if abs(guard) <= E_DENOMINATOR_GUARD:
        raise InvalidParameterError("alpha - beta - 1/2 must be nonzero", parameter="beta", value=beta)
    a2 = (1 - s) * alpha - (1 + s) * beta - (0.5 - t)
    b1 = (1 - s) * alpha + (1 - s) * beta + (0.5 + t)
    e = (alpha - 0.5) * a2 / guard
    return Restricted3F2Params(2 * alpha - 1, a2, b1, e).to_3f2()


def family_value(
    alpha: complex,
    beta: complex,
    s: complex,
    t: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> complex:
    """(1-x)^(2 alpha - 1) 3F2(family_params(alpha, beta, s, t); x)."""
    return (1 - x) ** (2 * alpha - 1) * eval_3F2(family_params(alpha, beta, s, t), x, policy)


def family_stability_check(
    alpha: complex,
    beta: complex,
    s: complex,
    t: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Relative change of family_value under alpha <-> beta."""
    if alpha == beta:
        return 0.0
    return _relative(
        family_value(alpha, beta, s, t, x, policy),
        family_value(beta, alpha, s, t, x, policy),
    )


def involution_value(alpha: complex, beta: complex, x: complex, policy: EvalPolicy = DEFAULT_POLICY) -> complex:
    """(1-x)^(2 alpha - 1) 3F2(2 alpha - 1, alpha - beta - 1/2, alpha + 1/2; alpha + beta + 1/2, alpha - 1/2; x)."""
    p = ThreeF2Params(2 * alpha - 1, alpha - beta - 0.5, alpha + 0.5, alpha + beta + 0.5, alpha - 0.5)
    return (1 - x) ** (2 * alpha - 1) * eval_3F2(p, x, policy)


def bailey_involution_check(
    alpha: complex,
    beta: complex,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> float:
    """Relative residual of the very-well-poised alpha <-> beta involution."""
    if alpha == beta:
        return 0.0
    return _relative(involution_value(alpha, beta, x, policy), involution_value(beta, alpha, x, policy))


def shared_exponent_rows(p1: PSymbol, p2: PSymbol, tol: float = EXPONENT_TOLERANCE) -> int:
    """Exponent rows two symbols have in common, minimized over their columns.

    Returns -1 when the symbols are not located at the same points.
    """
    if len(p1) != len(p2):
        return -1
    shared = p1.order
    for col in p1.columns:
        other = p2.exponents_at(col.location)
        if other is None:
            return -1
        unmatched = list(other)
        common = 0
        for z in col.exponents:
            hit = next((w for w in unmatched if abs(z - w) <= tol * max(1.0, abs(z))), None)
            if hit is not None:
                unmatched.remove(hit)
                common += 1
        shared = min(shared, common)
    return shared


def dual_symbols_shared_rows(alpha: complex, beta: complex) -> int:
    """Shared exponent rows of the two sides of the involution (2 for generic parameters)."""
    left, right = dual_third_order_symbols(alpha, beta)
    return shared_exponent_rows(left, right)
