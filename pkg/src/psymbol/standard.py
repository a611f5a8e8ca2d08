"""P-symbols of the Gauss, Heun and Clausen (3F2) equations."""

from __future__ import annotations

from src.kernel.params import GaussParams, HeunParams, ThreeF2Params
from src.psymbol.calculus import f_homotopy
from src.psymbol.sphere import ONE
from src.psymbol.symbol import PSymbol


def ghe_symbol(p: GaussParams) -> PSymbol:
    return PSymbol.build(
        [
            (0, (0, 1 - p.gamma)),
            (1, (0, p.gamma - p.alpha - p.beta)),
            (None, (p.alpha, p.beta)),
        ]
    )


def he_symbol(p: HeunParams) -> PSymbol:
    return PSymbol.build(
        [
            (0, (0, 1 - p.gamma)),
            (1, (0, 1 - p.delta)),
            (p.a, (0, 1 - p.epsilon)),
            (None, (p.alpha, p.beta)),
        ]
    )


def clausen_symbol(p: ThreeF2Params) -> PSymbol:
    """Third-order symbol of the 3F2 equation."""
    return PSymbol.build(
        [
            (0, (0, 1 - p.b1, 1 - p.b2)),
            (1, (0, 1, p.excess)),
            (None, (p.a1, p.a2, p.a3)),
        ],
        order=3,
    )


def involution_side_symbol(alpha: complex, beta: complex) -> PSymbol:
    """Symbol of (1-x)^(2α-1) 3F2(2α-1, α-β-1/2, α+1/2; α+β+1/2, α-1/2; x)."""
    params = ThreeF2Params(2 * alpha - 1, alpha - beta - 0.5, alpha + 0.5, alpha + beta + 0.5, alpha - 0.5)
    return f_homotopy(clausen_symbol(params), ONE, -(2 * alpha - 1))


def dual_third_order_symbols(alpha: complex, beta: complex) -> tuple[PSymbol, PSymbol]:
    """Symbols of the two sides of the very-well-poised alpha <-> beta involution."""
    return involution_side_symbol(alpha, beta), involution_side_symbol(beta, alpha)
