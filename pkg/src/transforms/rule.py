"""Executable transformation rules.

A rule is a chain of elementary steps. Each step maps the parameters, maps
the argument by a Möbius transformation fixing 0 and contributes power
prefactors ``(1 - x/c)**e``; the identity it encodes reads

    F(p; x) = prefactor(p, x) * F(p'; x').

Composite rules concatenate steps, so parameter threading, argument maps
and prefactors all come from walking the chain.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Any

from src.base.exceptions import HeunkitError, UnknownRuleError
from src.kernel.params import EvalPolicy
from src.kernel.series import DEFAULT_POLICY
from src.psymbol.maps import MobiusMap
from src.psymbol.sphere import INFINITY, SpherePoint
from src.transforms.signed_permutation import SignedPermutation

Params = Any
Evaluator = Callable[[Params, complex, EvalPolicy], complex]


@dataclass(frozen=True)
class RuleFamily:
    """What a group of rules acts on.

    Attributes:
        name: Catalog name ("gauss", "heun", "3f2").
        points: Labeled singular points permuted by the rules.
        function: Display name of the function.
        evaluate: Numeric evaluator F(p; x).
        radius: Convergence radius of F(p; .) at 0.
        locate: Location of a labeled point for given parameters.
        theta: Exponent difference at a labeled point, or None when the
            family carries no sign information.
        unpack: Parameter tuple for rendering.
        pack: Inverse of unpack.
    """

    name: str
    points: tuple[str, ...]
    function: str
    evaluate: Evaluator
    radius: Callable[[Params], float]
    locate: Callable[[Params, str], SpherePoint]
    theta: Callable[[Params, str], Any] | None
    unpack: Callable[[Params], tuple[Any, ...]]
    pack: Callable[..., Params]
    symbols: tuple[str, ...] = ()


@dataclass(frozen=True)
class PowerFactor:
    """Factor (1 - x/pole(p))**exponent(p) at the step's input point."""

    pole: Callable[[Params], Any]
    exponent: Callable[[Params], Any]

    def __call__(self, p: Params, x: Any) -> Any:
        return (1 - x / self.pole(p)) ** self.exponent(p)


@dataclass(frozen=True)
class RuleStep:
    name: str
    param_map: Callable[[Params], Params]
    arg_map: Callable[[Params], MobiusMap]
    factors: tuple[PowerFactor, ...] = ()


def identity_arg(_: Params) -> MobiusMap:
    return MobiusMap.identity()


@dataclass(frozen=True)
class TransformRule:
    """A labeled chain of steps acting on one family.

    Attributes:
        label: Signed permutation of the family's points.
        family: The family acted on.
        steps: Elementary steps, applied left to right.
        word: Generator names the rule was composed from.
    """

    label: SignedPermutation
    family: RuleFamily
    steps: tuple[RuleStep, ...] = ()
    word: tuple[str, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.label.bracket()

    def trace(self, p: Params, x: Any = 0) -> Iterator[tuple[RuleStep, Params, Any]]:
        """Yield (step, params, x) at the input of every step."""
        for step in self.steps:
            yield step, p, x
            x = step.arg_map(p)(x)
            p = step.param_map(p)

    def param_map(self, p: Params) -> Params:
        for step in self.steps:
            p = step.param_map(p)
        return p

    def arg_map(self, p: Params) -> MobiusMap:
        m = MobiusMap.identity()
        for step in self.steps:
            m = step.arg_map(p).compose(m)
            p = step.param_map(p)
        return m

    def prefactor(self, p: Params, x: Any) -> Any:
        value: Any = 1
        for step, q, y in self.trace(p, x):
            for factor in step.factors:
                value = value * factor(q, y)
        return value

    def points_along(self, p: Params, x: complex) -> list[tuple[Params, complex]]:
        """(params, point) pairs visited by the chain, final pair included."""
        visited = [(q, y) for _, q, y in self.trace(p, x)]
        visited.append((self.param_map(p), self.arg_map(p)(x)))
        return visited

    def then(self, other: TransformRule) -> TransformRule:
        """Rule applying self first and other second."""
        if other.family.name != self.family.name:
            raise HeunkitError("cannot compose rules of different families")
        return TransformRule(
            self.label.then(other.label),
            self.family,
            self.steps + other.steps,
            self.word + other.word,
        )

    def power(self, k: int) -> TransformRule:
        result = identity_rule(self.family)
        for _ in range(k):
            result = result.then(self)
        return result


def identity_rule(family: RuleFamily) -> TransformRule:
    return TransformRule(SignedPermutation.identity(family.points), family, (), ())


def apply_rule(
    rule: TransformRule,
    p: Params,
    x: complex,
    policy: EvalPolicy = DEFAULT_POLICY,
) -> complex:
    """prefactor(p, x) * F(param_map(p); arg_map(p)(x))."""
    target = rule.param_map(p)
    x_new = rule.arg_map(p)(complex(x))
    return complex(rule.prefactor(p, complex(x))) * rule.family.evaluate(target, x_new, policy)


def infer_label(rule: TransformRule, probe: Params, tol: float = 1e-8) -> SignedPermutation:
    """Recompute a rule's label from where it sends the singular points.

    Each point P goes to the point of the transformed equation at M(P), and
    its sign compares the exponent difference there with the one at P.

    Raises:
        UnknownRuleError: The action does not match any signed permutation.
    """
    family = rule.family
    if family.theta is None:
        raise UnknownRuleError(f"family {family.name} has no exponent data", label=rule.name)
    target = rule.param_map(probe)
    m = rule.arg_map(probe)
    mapping: dict[str, str] = {}
    signs: dict[str, int] = {}
    for point in family.points:
        moved = m.apply(family.locate(probe, point))
        match = [q for q in family.points if family.locate(target, q).close(moved, tol)]
        if len(match) != 1:
            raise UnknownRuleError("point does not land on a singular point", label=rule.name)
        mapping[point] = match[0]
        before = complex(family.theta(probe, point))
        after = complex(family.theta(target, match[0]))
        scale = max(1.0, abs(before))
        if abs(after - before) <= tol * scale:
            signs[point] = 1
        elif abs(after + before) <= tol * scale:
            signs[point] = -1
        else:
            raise UnknownRuleError("exponent difference not preserved up to sign", label=rule.name)
    return SignedPermutation.from_mapping(family.points, mapping, signs)


def locate_fixed(p: Params, point: str) -> SpherePoint:
    """Locations 1 and infinity, plus p.a for Heun families."""
    if point == "1":
        return SpherePoint(1)
    if point == "inf":
        return INFINITY
    return SpherePoint(p.a)
