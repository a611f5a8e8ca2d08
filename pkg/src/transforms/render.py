"""Symbolic rendering of transformation rules for the rule catalog.

Rules are run on sympy symbols: the parameter map gives the transformed
tuple, the argument map a rational function of x, and the step prefactors
are merged into powers of (1 - x/c). The numeric path never imports this.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Any

import sympy

from src.kernel.params import GaussParams, HeunParams, Restricted3F2Params
from src.psymbol.standard import clausen_symbol, ghe_symbol, he_symbol
from src.psymbol.symbol import PSymbol
from src.transforms.rule import TransformRule

X = sympy.Symbol("x")


def _clean(expr: Any) -> Any:
    return sympy.simplify(sympy.nsimplify(sympy.sympify(expr), rational=True))


def _symbols(rule: TransformRule) -> list[sympy.Symbol]:
    return [sympy.Symbol(name) for name in rule.family.symbols]


def symbolic_params(rule: TransformRule) -> tuple[Any, Any]:
    """(source, target) parameter tuples of ``rule`` over sympy symbols."""
    source = rule.family.pack(*_symbols(rule))
    return source, rule.param_map(source)


def merged_prefactor(rule: TransformRule) -> dict[Any, Any]:
    """Exponent of (1 - x/c) for each pole c of the merged prefactor.

    A step factor (1 - y/c) with y a Möbius image of x is split into linear
    factors of x; constants cancel because every factor is 1 at x = 0.
    Bases that do not split into linear factors are kept whole.
    """
    source = rule.family.pack(*_symbols(rule))
    powers: dict[Any, Any] = defaultdict(lambda: sympy.Integer(0))
    for step, p, y in rule.trace(source, X):
        for factor in step.factors:
            base = sympy.cancel(sympy.together(_clean(1 - y / factor.pole(p))))
            exponent = _clean(factor.exponent(p))
            numer, denom = sympy.fraction(base)
            for part, sign in ((numer, 1), (denom, -1)):
                poly = sympy.Poly(part, X)
                if poly.degree() == 0:
                    continue
                if poly.degree() == 1:
                    c1, c0 = poly.all_coeffs()
                    root = sympy.simplify(-c0 / c1)
                    powers[root] += sign * exponent
                else:
                    powers[("poly", part)] += sign * exponent
    return {pole: sympy.simplify(e) for pole, e in powers.items() if sympy.simplify(e) != 0}


def render_prefactor(powers: dict[Any, Any]) -> str:
    if not powers:
        return ""
    parts = []
    for pole, exponent in powers.items():
        if isinstance(pole, tuple):
            base = f"({sympy.sstr(pole[1])})"
        else:
            base = "(1 - x)" if pole == 1 else f"(1 - x/({sympy.sstr(pole)}))"
        parts.append(f"{base}^({sympy.sstr(exponent)})")
    return " * ".join(parts) + " * "


def render_rule(rule: TransformRule) -> str:
    """Two-line formula of ``rule``, e.g. ``2F1(alpha, beta; gamma; x) = (1 - x)^(-alpha) * 2F1(...)``."""
    source, target = symbolic_params(rule)
    arg = sympy.factor(_clean(rule.arg_map(source)(X)))
    src_args = ", ".join(sympy.sstr(s) for s in rule.family.unpack(source))
    dst_args = ", ".join(sympy.sstr(_clean(v)) for v in rule.family.unpack(target))
    name = rule.family.function
    prefactor = render_prefactor(merged_prefactor(rule))
    return f"{name}({src_args}; x)\n  = {prefactor}{name}({dst_args}; {sympy.sstr(arg)})"


def symbol_of(params: Any) -> PSymbol:
    """P-symbol of the equation a parameter set belongs to."""
    if isinstance(params, HeunParams):
        return he_symbol(params)
    if isinstance(params, GaussParams):
        return ghe_symbol(params)
    if isinstance(params, Restricted3F2Params):
        return clausen_symbol(params.to_3f2())
    raise TypeError(f"no P-symbol for {type(params).__name__}")


def explain_rule(rule: TransformRule, probe: Any) -> str:
    """Formula, generator word and both P-symbols at ``probe``."""
    word = " * ".join(rule.word) if rule.word else "identity"
    lines = [
        f"rule {rule.name} ({rule.family.name})",
        f"word: {word}",
        render_rule(rule),
        "",
        "source P-symbol:",
        symbol_of(probe).render(),
        "target P-symbol:",
        symbol_of(rule.param_map(probe)).render(),
    ]
    return "\n".join(lines)
