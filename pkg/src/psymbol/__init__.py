"""Riemann P-symbols and their exponent calculus."""

from src.psymbol.branching import (
    biquadratic_branching,
    biquadratic_map,
    quadratic_branching,
    quadratic_map,
)
from src.psymbol.calculus import (
    derivative_symbol,
    f_homotopy,
    fuchs_sum,
    fuchs_target,
    mobius_branching,
    mobius_lift,
    normalize,
    rational_lift,
    satisfies_fuchs,
)
from src.psymbol.maps import BranchPoint, MobiusMap, RationalMap
from src.psymbol.sphere import INFINITY, ONE, ZERO, SpherePoint
from src.psymbol.standard import (
    clausen_symbol,
    dual_third_order_symbols,
    ghe_symbol,
    he_symbol,
)
from src.psymbol.symbol import Column, PSymbol

__all__ = [
    "INFINITY",
    "ONE",
    "ZERO",
    "BranchPoint",
    "Column",
    "MobiusMap",
    "PSymbol",
    "RationalMap",
    "SpherePoint",
    "biquadratic_branching",
    "biquadratic_map",
    "clausen_symbol",
    "derivative_symbol",
    "dual_third_order_symbols",
    "f_homotopy",
    "fuchs_sum",
    "fuchs_target",
    "ghe_symbol",
    "he_symbol",
    "mobius_branching",
    "mobius_lift",
    "normalize",
    "quadratic_branching",
    "quadratic_map",
    "rational_lift",
    "satisfies_fuchs",
]
