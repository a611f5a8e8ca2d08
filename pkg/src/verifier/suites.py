"""Identity suites: each one turns a sampling plan into a list of checks.

A suite only draws parameters and points and wraps each identity in a
zero-argument check returning a residual; nothing is evaluated while the
task list is built. Task order, and therefore case order in the report,
depends on the seed alone.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import partial
from itertools import permutations
from typing import Any

from src.base.exceptions import DegenerateError, InvalidParameterError
from src.hyper3f2.corollaries import (
    bailey_involution_check,
    bailey_slater_check,
    bailey_slater_params,
    dual_symbols_shared_rows,
    family_params,
    family_stability_check,
    reduce_to_2f1,
    reduction_e,
    very_well_poised_check,
)
from src.hyper3f2.poisedness import PoisednessClass, classify_poisedness
from src.hyper3f2.transforms import (
    EULER_LIKE,
    PFAFF_LIKE,
    euler_e_map,
    pfaff_e_map,
    restricted_group,
    transform_residual,
)
from src.kernel.classify import classify_2term, classify_3term, forward_2term, forward_3term
from src.kernel.params import EvalPolicy, HeunParams, QuadraticPoly, Restricted3F2Params, ThreeF2Params
from src.kernel.series import heun_coeffs
from src.psymbol.calculus import (
    derivative_symbol,
    f_homotopy,
    fuchs_sum,
    fuchs_target,
    mobius_lift,
    normalize,
    satisfies_fuchs,
)
from src.psymbol.maps import MobiusMap
from src.psymbol.sphere import SpherePoint
from src.psymbol.standard import he_symbol
from src.psymbol.symbol import PSymbol
from src.reduction.curve import (
    ApparentCurvePoint,
    apparent_row_residual,
    contiguity_residual,
    curve_contiguity_residual,
    curve_point,
    curve_point_residual,
    eval_G,
    g_equals_3f2_residual,
    g_two_representations,
    heun_to_gauss_residual,
    qprime_residual,
    relabeled,
)
from src.reduction.factorization import (
    difference_factorization_residual,
    differential_factorization_residual,
)
from src.schemas.report import SamplePlan
from src.transforms.closure import is_closed
from src.transforms.gauss import EULER, PFAFF, TWISTED_PFAFF, kummer_group, kummer_rules
from src.transforms.heun import (
    derivative_identity_check,
    derivative_target,
    generate_hl_group,
    he_operator_residual,
    local_solution_at_a,
    local_solution_residual,
    mobius_hl_rules,
    qbar_naturality_residual,
    solution_at_a_params,
)
from src.transforms.quadratic import (
    QuadraticLiftData,
    biquad_forms_residual,
    biquad_map_S,
    biquadratic_rule,
    biquadratic_symbol_check,
    h_duplication_check,
    lift_from_t,
    multiplier,
    quad_map_R,
    quadratic_rule,
    quadratic_symbol_check,
    relative_constraint_residual,
)
from src.transforms.rule import TransformRule, apply_rule, infer_label
from src.transforms.signed_permutation import coxeter_order
from src.verifier.sampling import LOWER_MARGIN, Sampler, halve_until, lower_distance, shrink_point

# Default tolerances
RULE_TOL = 1e-9
QBAR_TOL = 1e-10
CURVE_TOL = 1e-12
REDUCTION_TOL = 1e-10
FACTOR_TOL = 1e-12
CLOSED_FORM_TOL = 1e-12
CLASSIFIER_TOL = 1e-8
EXACT_TOL = 1e-12

# Draw counts fixed by the identities themselves rather than the plan
QBAR_DRAWS = 50
CONSTRAINT_DRAWS = 50
CURVE_DRAWS = 50
CURVE_POINTS = 10
CLOSED_FORM_POINTS = 10
CLASSIFIER_DRAWS = 100
GROUP_PROBES = 5
FAMILY_PAIRS = 5

OFF_CURVE_SHIFT = 1e-3
OFF_CURVE_FLOOR = 1e-6
PARTIAL_FRACTION = 0.5
"""Largest |x| / radius accepted on either side of a lifted rule."""

Check = Callable[[], float]


@dataclass(frozen=True)
class CaseTask:
    """A deferred identity check with the draw that produced it."""

    rule: str
    index: int
    check: Check
    tolerance: float
    params: dict[str, complex] = field(default_factory=dict)
    point: complex | None = None


class SuiteBuilder:
    """Collects the tasks of one suite in draw order."""

    def __init__(self, name: str, plan: SamplePlan, policy: EvalPolicy, suite_index: int) -> None:
        self.name = name
        self.draws = plan.draws_per_rule
        self.policy = policy
        self.sampler = Sampler.for_suite(plan, suite_index)
        self.tasks: list[CaseTask] = []

    def add(
        self,
        rule: str,
        check: Check,
        tolerance: float,
        params: Any = None,
        point: complex | None = None,
    ) -> None:
        self.tasks.append(
            CaseTask(rule, len(self.tasks), check, tolerance, params_of(params), point)
        )


def params_of(params: Any) -> dict[str, complex]:
    """Numeric fields of a parameter record (or a plain mapping) for the report."""
    if params is None:
        return {}
    if isinstance(params, dict):
        return {k: complex(v) for k, v in params.items()}
    return {
        f.name: complex(getattr(params, f.name))
        for f in dataclasses.fields(params)
        if getattr(params, f.name) is not None
    }


def relative(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def indicator(ok: bool) -> float:
    return 0.0 if ok else 1.0


def rule_residual(rule: TransformRule, p: Any, x: complex, policy: EvalPolicy) -> float:
    """Relative mismatch of F(p; x) and the rule's right-hand side."""
    return relative(rule.family.evaluate(p, x, policy), apply_rule(rule, p, x, policy))


def _draw_on_chain(b: SuiteBuilder, rule: TransformRule, draw: Callable[[], Any]) -> tuple[Any, complex]:
    def attempt() -> tuple[Any, complex]:
        p = draw()
        x = b.sampler.point(rule.family.radius(p))
        return p, shrink_point(rule, p, x)

    return b.sampler.retry(attempt)


def _group_cases(b: SuiteBuilder, rules: list[TransformRule], kind: str, n: int) -> None:
    expected = coxeter_order(kind, n)
    b.add(f"closure-order:{kind}{n}", lambda: float(abs(len(rules) - expected)), EXACT_TOL)
    b.add(f"closure-closed:{kind}{n}", lambda: indicator(is_closed(rules)), EXACT_TOL)


def _label_check(rule: TransformRule, probe: Any) -> float:
    return indicator(infer_label(rule, probe) == rule.label)


# gauss ----------------------------------------------------------------------


def gauss_suite(b: SuiteBuilder) -> None:
    for rule in kummer_rules(include_swap=True):
        for _ in range(b.draws):
            p, x = _draw_on_chain(b, rule, b.sampler.gauss_params)
            b.add(rule.name, partial(rule_residual, rule, p, x, b.policy), RULE_TOL, p, x)

    _group_cases(b, kummer_group(include_swap=False), "D", 2)
    full = kummer_group(include_swap=True)
    _group_cases(b, full, "B", 2)
    probe = b.sampler.gauss_params()
    for rule in full:
        b.add(f"infer-label:{rule.name}", partial(_label_check, rule, probe), EXACT_TOL, probe)

    involutions = (EULER, PFAFF, TWISTED_PFAFF)
    for rule in involutions:
        square = rule.power(2)
        b.add(f"involution:{rule.word[0]}", partial(lambda r: indicator(r.label.is_identity), square), EXACT_TOL)
        p, x = _draw_on_chain(b, square, b.sampler.gauss_params)
        b.add(
            f"involution-value:{rule.word[0]}",
            partial(rule_residual, square, p, x, b.policy),
            RULE_TOL,
            p,
            x,
        )
    for r1, r2 in permutations(involutions, 2):
        (third,) = [r for r in involutions if r is not r1 and r is not r2]
        b.add(
            f"klein:{r1.word[0]}*{r2.word[0]}",
            partial(lambda u, v, w: indicator(u.then(v).label == w.label), r1, r2, third),
            EXACT_TOL,
        )


# heun-group -----------------------------------------------------------------


def _local_solution_draw(b: SuiteBuilder) -> tuple[HeunParams, complex]:
    p = b.sampler.heun_params()
    pa = solution_at_a_params(p)
    if lower_distance(pa.gamma) < LOWER_MARGIN:
        raise InvalidParameterError("epsilon too close to a pole", parameter="epsilon", value=pa.gamma)
    u = b.sampler.point(pa.radius)
    return p, p.a * (1 - u)


def heun_group_suite(b: SuiteBuilder) -> None:
    group = generate_hl_group(include_swap=False)
    for rule in group:
        for _ in range(b.draws):
            p, x = _draw_on_chain(b, rule, b.sampler.heun_params)
            b.add(rule.name, partial(rule_residual, rule, p, x, b.policy), RULE_TOL, p, x)

    _group_cases(b, group, "D", 3)
    full = generate_hl_group(include_swap=True)
    _group_cases(b, full, "B", 3)
    for rule in group:
        b.add(f"even:{rule.name}", partial(lambda r: indicator(r.label.is_even), rule), EXACT_TOL)
    probe = b.sampler.heun_params()
    for rule in full:
        b.add(f"infer-label:{rule.name}", partial(_label_check, rule, probe), EXACT_TOL, probe)

    for rule in mobius_hl_rules():
        for _ in range(QBAR_DRAWS):
            p = b.sampler.heun_params()
            b.add(f"qbar:{rule.name}", partial(qbar_naturality_residual, rule, p), QBAR_TOL, p)

    for _ in range(b.draws):
        p, x = b.sampler.retry(partial(_local_solution_draw, b))
        b.add("local-solution-at-a", partial(local_solution_residual, p, x), RULE_TOL, p, x)
        b.add(
            "local-solution-normalized",
            partial(lambda q: abs(local_solution_at_a(q, q.a, b.policy) - 1), p),
            EXACT_TOL,
            p,
            p.a,
        )
        p = b.sampler.heun_params()
        x = b.sampler.point(p.radius)
        b.add(
            "he-operator",
            partial(lambda q, y: he_operator_residual(q, heun_coeffs(q, 255), y), p, x),
            RULE_TOL,
            p,
            x,
        )


# quadratic / biquadratic / h-dup --------------------------------------------


def _lift_data(b: SuiteBuilder) -> QuadraticLiftData:
    d = lift_from_t(b.sampler.param())
    if min(abs(d.a), abs(d.a_prime)) < 0.01:
        raise DegenerateError("singular point too close to 0", reason="small a")
    return d


def _quadratic_draw(b: SuiteBuilder) -> tuple[QuadraticLiftData, complex, complex, complex, complex]:
    d = _lift_data(b)
    alpha, gamma, q = b.sampler.param(), b.sampler.lower(), b.sampler.param()

    def fits(x: complex) -> bool:
        return (
            abs(x) <= PARTIAL_FRACTION * d.source_radius
            and abs(quad_map_R(d, x)) <= PARTIAL_FRACTION * d.target_radius
        )

    x = halve_until(b.sampler.point(d.source_radius), fits)
    return d, alpha, gamma, q, x


def quadratic_suite(b: SuiteBuilder) -> None:
    for _ in range(b.draws):
        d, alpha, gamma, q, x = b.sampler.retry(partial(_quadratic_draw, b))
        params = {"t": d.t, "alpha": alpha, "gamma": gamma, "q": q}
        b.add(
            "quadratic",
            partial(lambda *args: relative(*quadratic_rule(*args)), d, alpha, gamma, q, x, b.policy),
            RULE_TOL,
            params,
            x,
        )
    for _ in range(CONSTRAINT_DRAWS):
        d = b.sampler.retry(lambda: lift_from_t(b.sampler.param()))
        params = {"t": d.t}
        b.add("constraint", partial(relative_constraint_residual, d.a, d.a_prime), CURVE_TOL, params)
        b.add("multiplier", partial(lambda e: relative(e.A, multiplier(e.a, e.a_prime)), d), CURVE_TOL, params)


def _quartic_point(b: SuiteBuilder, a: complex) -> complex:
    radius = min(1.0, abs(a))

    def fits(x: complex) -> bool:
        return abs(x) <= PARTIAL_FRACTION * radius and abs(biquad_map_S(a, x)) <= PARTIAL_FRACTION * radius

    return halve_until(b.sampler.point(radius), fits)


def biquadratic_suite(b: SuiteBuilder) -> None:
    for _ in range(b.draws):
        a, q, gamma = b.sampler.heun_a(), b.sampler.param(), b.sampler.lower()
        x = _quartic_point(b, a)
        b.add(
            "biquadratic",
            partial(lambda *args: relative(*biquadratic_rule(*args)), a, q, gamma, x, b.policy),
            RULE_TOL,
            {"a": a, "q": q, "gamma": gamma},
            x,
        )
    for _ in range(b.draws):
        a = b.sampler.heun_a()
        x = b.sampler.point(1.0)
        b.add("s-forms", partial(biquad_forms_residual, a, x), CURVE_TOL, {"a": a}, x)


def h_dup_suite(b: SuiteBuilder) -> None:
    for _ in range(b.draws):
        a, q = b.sampler.heun_a(), b.sampler.param()
        x = _quartic_point(b, a)
        b.add("h-duplication", partial(h_duplication_check, a, q, x, b.policy), RULE_TOL, {"a": a, "q": q}, x)


# reduction / factorization --------------------------------------------------


def _curve_draw(b: SuiteBuilder) -> ApparentCurvePoint:
    alpha, beta, gamma = b.sampler.param(), b.sampler.param(), b.sampler.lower()
    if lower_distance(gamma - 1) < LOWER_MARGIN:
        raise InvalidParameterError("gamma - 1 too close to a pole", parameter="gamma", value=gamma)
    cp = curve_point(alpha, beta, gamma, b.sampler.lower())
    if not (0.2 <= abs(cp.a) <= 5 and abs(cp.a - 1) >= 0.2):
        raise DegenerateError("a(e) too close to a singular point", reason="curve point")
    return cp


def _g_representations(cp: ApparentCurvePoint, x: complex, policy: EvalPolicy) -> float:
    r1, r2 = g_two_representations(cp, x, policy)
    return max(relative(r1, r2), relative(eval_G(cp, x, policy), r1))


def _qprime_relative(cp: ApparentCurvePoint) -> float:
    q_prime = relabeled(cp)[1]
    return abs(qprime_residual(cp)) / max(1.0, abs(q_prime) ** 2)


def reduction_suite(b: SuiteBuilder) -> None:
    for _ in range(CURVE_DRAWS):
        cp = b.sampler.retry(partial(_curve_draw, b))
        radius = min(1.0, abs(cp.a))
        b.add("curve", partial(curve_point_residual, cp), CURVE_TOL, cp)
        b.add("qprime-curve", partial(_qprime_relative, cp), REDUCTION_TOL, cp)
        b.add("apparent-row", partial(apparent_row_residual, cp), REDUCTION_TOL, cp)
        for _ in range(CURVE_POINTS):
            x = b.sampler.point(radius)
            b.add("g-equals-3f2", partial(g_equals_3f2_residual, cp, x, b.policy), REDUCTION_TOL, cp, x)
        x = b.sampler.point(radius)
        b.add("two-2f1", partial(_g_representations, cp, x, b.policy), REDUCTION_TOL, cp, x)
        b.add("contiguity", partial(curve_contiguity_residual, cp, x, b.policy), REDUCTION_TOL, cp, x)
        b.add(
            "contiguity-general",
            partial(contiguity_residual, cp.threef2_params, x, 0, 0, b.policy),
            REDUCTION_TOL,
            cp,
            x,
        )
    for _ in range(b.draws):
        g, a = b.sampler.gauss_params(), b.sampler.heun_a()
        x = b.sampler.point(1.0)
        b.add(
            "heun-to-gauss",
            partial(heun_to_gauss_residual, g, a, x, 32, b.policy),
            REDUCTION_TOL,
            {**params_of(g), "a": a},
            x,
        )


def _off_curve(cp: ApparentCurvePoint, residual: Callable[..., float]) -> float:
    shifted = cp.heun_params.replace(q=cp.q + OFF_CURVE_SHIFT)
    return indicator(residual(cp, heun=shifted) >= OFF_CURVE_FLOOR)


def factorization_suite(b: SuiteBuilder) -> None:
    for _ in range(b.draws):
        cp = b.sampler.retry(partial(_curve_draw, b))
        b.add("difference-factorization", partial(difference_factorization_residual, cp), FACTOR_TOL, cp)
        b.add("differential-factorization", partial(differential_factorization_residual, cp), FACTOR_TOL, cp)
        b.add(
            "difference-off-curve",
            partial(_off_curve, cp, difference_factorization_residual),
            FACTOR_TOL,
            cp,
        )
        b.add(
            "differential-off-curve",
            partial(_off_curve, cp, differential_factorization_residual),
            FACTOR_TOL,
            cp,
        )


# 3F2 ------------------------------------------------------------------------


def _restricted_draw(b: SuiteBuilder, rule: TransformRule) -> Restricted3F2Params:
    """Restricted parameters whose lower parameters stay clear of poles along the rule."""
    s = b.sampler
    p = Restricted3F2Params(s.param(), s.param(), s.lower(), s.lower())
    for q, _ in rule.points_along(p, 0):
        if min(lower_distance(q.b1), lower_distance(q.e)) < LOWER_MARGIN:
            raise DegenerateError("transformed e too close to a pole", reason="e")
    return p


def _e_map_zero(m: MobiusMap) -> float:
    """|m(0)| in a form that stays finite when d = 0."""
    return abs(m.b) / max(1.0, abs(m.a), abs(m.d))


def _involution_gap(rule: TransformRule, p: Restricted3F2Params) -> float:
    back = rule.power(2).param_map(p)
    return max(relative(u, v) for u, v in zip(p.as_tuple(), back.as_tuple()))


def _restricted_rule_cases(
    b: SuiteBuilder,
    rule: TransformRule,
    e_map: Callable[[Restricted3F2Params], MobiusMap],
    example_e: complex,
) -> None:
    tag = rule.word[0]
    for _ in range(b.draws):
        p, x = _draw_on_chain(b, rule, partial(_restricted_draw, b, rule.power(2)))
        b.add(tag, partial(transform_residual, rule, p, x, b.policy), RULE_TOL, p, x)
        b.add(f"{tag}:e-map-fixes-zero", partial(_e_map_zero, e_map(p)), EXACT_TOL, p)
        b.add(f"{tag}:involution", partial(_involution_gap, rule, p), RULE_TOL, p)
    example = Restricted3F2Params(1, 2, 5, 3)
    b.add(
        f"{tag}:e-map-example",
        lambda: relative(rule.param_map(example).e, example_e),
        EXACT_TOL,
        example,
    )


def f32_pfaff_suite(b: SuiteBuilder) -> None:
    _restricted_rule_cases(b, PFAFF_LIKE, pfaff_e_map, 6)
    _group_cases(b, restricted_group(include_swap=False), "D", 2)
    full = restricted_group(include_swap=True)
    _group_cases(b, full, "B", 2)
    for rule in full:
        for _ in range(GROUP_PROBES):
            p, x = _draw_on_chain(b, rule, partial(_restricted_draw, b, rule))
            b.add(f"group:{rule.name}", partial(transform_residual, rule, p, x, b.policy), RULE_TOL, p, x)


def f32_euler_suite(b: SuiteBuilder) -> None:
    _restricted_rule_cases(b, EULER_LIKE, euler_e_map, 18 / 5)


def _require_lower(*values: complex) -> None:
    for v in values:
        if lower_distance(v) < LOWER_MARGIN:
            raise InvalidParameterError("lower parameter too close to a pole", parameter="lower", value=v)


def _bailey_slater_draw(b: SuiteBuilder) -> tuple[complex, complex, complex]:
    a1, a2, b1 = b.sampler.param(), b.sampler.param(), b.sampler.lower()
    _require_lower(-a2, (b1 - a2 - 1) / 2)
    return a1, a2, b1


def _reduction_draw(b: SuiteBuilder) -> tuple[complex, complex, complex]:
    a1, a2, b1 = b.sampler.param(), b.sampler.param(), b.sampler.lower()
    _require_lower(reduction_e(a1, a2, b1))
    return a1, a2, b1


def _closed_form(x: complex, policy: EvalPolicy) -> float:
    lhs, rhs = reduce_to_2f1(1, 1, 2, x, policy)
    exact = 1 / (1 - x)
    return max(relative(lhs, exact), relative(rhs, exact))


def _alpha_beta_draw(b: SuiteBuilder, lowers: Callable[[complex, complex], tuple[complex, ...]]) -> tuple[complex, complex]:
    alpha, beta = b.sampler.param(), b.sampler.param()
    _require_lower(*lowers(alpha, beta), *lowers(beta, alpha))
    return alpha, beta


def _family_lowers(st: tuple[complex, complex]) -> Callable[[complex, complex], tuple[complex, ...]]:
    def lowers(alpha: complex, beta: complex) -> tuple[complex, ...]:
        p = family_params(alpha, beta, *st)
        return (p.b1, p.b2)

    return lowers


def _poised(p: ThreeF2Params, expected: PoisednessClass) -> float:
    return indicator(classify_poisedness(p) == expected)


def f32_corollaries_suite(b: SuiteBuilder) -> None:
    s = b.sampler
    for _ in range(b.draws):
        a1, a2, b1 = s.retry(partial(_bailey_slater_draw, b))
        x = s.point(1.0)
        params = {"a1": a1, "a2": a2, "b1": b1}
        b.add("bailey-slater", partial(bailey_slater_check, a1, a2, b1, x, b.policy), RULE_TOL, params, x)
        right = bailey_slater_params(a1, a2, b1)[1]
        b.add("poised:bailey-slater-right", partial(_poised, right, PoisednessClass.NEARLY_VERY_WELL), EXACT_TOL, params)

    for _ in range(b.draws):
        a1, a2, b1 = s.retry(partial(_reduction_draw, b))
        x = s.point(1.0)
        b.add(
            "reduce-to-2f1",
            partial(lambda *args: relative(*reduce_to_2f1(*args)), a1, a2, b1, x, b.policy),
            RULE_TOL,
            {"a1": a1, "a2": a2, "b1": b1},
            x,
        )
    for _ in range(CLOSED_FORM_POINTS):
        x = s.point(1.0)
        b.add("reduce-to-2f1:closed-form", partial(_closed_form, x, b.policy), CLOSED_FORM_TOL, None, x)

    def vwp_lowers(alpha: complex, beta: complex) -> tuple[complex, ...]:
        return (alpha - beta + 1, alpha / 2)

    for _ in range(b.draws):
        alpha, beta = s.retry(partial(_alpha_beta_draw, b, vwp_lowers))
        x = s.point(1.0)
        params = {"alpha": alpha, "beta": beta}
        b.add("very-well-poised", partial(very_well_poised_check, alpha, beta, x, b.policy), RULE_TOL, params, x)
        vwp = ThreeF2Params(alpha, beta, alpha / 2 + 1, alpha - beta + 1, alpha / 2)
        b.add("poised:very-well", partial(_poised, vwp, PoisednessClass.VERY_WELL), EXACT_TOL, params)

    pairs = [(s.param(), s.param()) for _ in range(FAMILY_PAIRS)]
    for i in range(b.draws):
        st = pairs[i % FAMILY_PAIRS]
        alpha, beta = s.retry(partial(_alpha_beta_draw, b, _family_lowers(st)))
        x = s.point(1.0)
        b.add(
            "family-symmetry",
            partial(family_stability_check, alpha, beta, *st, x, b.policy),
            RULE_TOL,
            {"alpha": alpha, "beta": beta, "s": st[0], "t": st[1]},
            x,
        )

    def involution_lowers(alpha: complex, beta: complex) -> tuple[complex, ...]:
        return (alpha + beta + 0.5, alpha - 0.5)

    for _ in range(b.draws):
        alpha, beta = s.retry(partial(_alpha_beta_draw, b, involution_lowers))
        x = s.point(1.0)
        params = {"alpha": alpha, "beta": beta}
        b.add("involution", partial(bailey_involution_check, alpha, beta, x, b.policy), RULE_TOL, params, x)
        side = ThreeF2Params(2 * alpha - 1, alpha - beta - 0.5, alpha + 0.5, alpha + beta + 0.5, alpha - 0.5)
        b.add("poised:involution", partial(_poised, side, PoisednessClass.VERY_WELL), EXACT_TOL, params)
        b.add(
            "dual-symbols-shared-rows",
            partial(lambda u, v: float(abs(dual_symbols_shared_rows(u, v) - 2)), alpha, beta),
            EXACT_TOL,
            params,
        )


# derivative / classifier / psymbol ------------------------------------------


def derivative_suite(b: SuiteBuilder) -> None:
    for n in range(1, 5):
        for _ in range(b.draws):
            p = b.sampler.heun_params(alpha=1 - n)
            b.add(
                f"derivative:N={n}",
                partial(lambda q, k: derivative_identity_check(q, k, b.policy)[1], p, n),
                RULE_TOL,
                p,
            )


def _pair_gap(found: tuple[complex, complex], expected: tuple[complex, complex]) -> float:
    first, second = sorted(expected, key=lambda z: (z.real, z.imag))
    return max(relative(found[0], first), relative(found[1], second))


def _two_term_round_trip(big_a: complex, p: Any) -> float:
    found_a, found = classify_2term(*forward_2term(big_a, p))
    return max(
        relative(found_a, big_a),
        _pair_gap((found.alpha, found.beta), (p.alpha, p.beta)),
        relative(found.gamma, p.gamma),
    )


def _three_term_round_trip(big_a: complex, p: HeunParams, scale: complex) -> float:
    found_a, found = classify_3term(*forward_3term(big_a, p, scale))
    return max(
        relative(found_a, big_a),
        relative(found.a, p.a),
        relative(found.q, p.q),
        _pair_gap((found.alpha, found.beta), (p.alpha, p.beta)),
        relative(found.gamma, p.gamma),
        relative(found.delta, p.delta),
    )


def _confluent_rejected() -> float:
    p2 = QuadraticPoly.from_roots(1, -1.5, -2)
    p1 = QuadraticPoly(-2, 1, 0.5)
    p0 = QuadraticPoly.from_roots(1, -0.3, 0.7)
    try:
        classify_3term(p2, p1, p0)
    except DegenerateError:
        return 0.0
    return 1.0


def classifier_suite(b: SuiteBuilder) -> None:
    s = b.sampler
    for _ in range(CLASSIFIER_DRAWS):
        big_a, p = s.polar(0.5, 2.0), s.gauss_params()
        b.add("classify-2term", partial(_two_term_round_trip, big_a, p), CLASSIFIER_TOL, {**params_of(p), "A": big_a})
    for _ in range(CLASSIFIER_DRAWS):
        big_a, p, scale = s.polar(0.5, 2.0), s.heun_params(), s.polar(0.5, 2.0)
        b.add(
            "classify-3term",
            partial(_three_term_round_trip, big_a, p, scale),
            CLASSIFIER_TOL,
            {**params_of(p), "A": big_a, "scale": scale},
        )
    b.add("classify-3term:confluent", _confluent_rejected, EXACT_TOL)


def _fuchs_gap(before: PSymbol, after: PSymbol) -> float:
    excess_before = fuchs_sum(before) - fuchs_target(before)
    excess_after = fuchs_sum(after) - fuchs_target(after)
    return abs(excess_after - excess_before)


def _mobius_draw(b: SuiteBuilder) -> MobiusMap:
    s = b.sampler
    return MobiusMap(s.param(), s.param(), s.param(), s.param())


def _mobius_functor_check(symbol: PSymbol, m1: MobiusMap, m2: MobiusMap) -> float:
    stepwise = mobius_lift(mobius_lift(symbol, m1), m2)
    return indicator(stepwise.equivalent(mobius_lift(symbol, m1.compose(m2))))


def _f_homotopy_roundtrip_check(symbol: PSymbol, x0: SpherePoint, zeta: complex) -> float:
    there = f_homotopy(symbol, x0, zeta)
    back = f_homotopy(there, x0, -zeta).drop_ordinary()
    return indicator(back.equivalent(symbol.drop_ordinary()))


def _derivative_symbol_check(p: HeunParams, n: int) -> float:
    lhs = derivative_symbol(he_symbol(p), n)
    return indicator(lhs.equivalent(he_symbol(derivative_target(p, n))))


def psymbol_suite(b: SuiteBuilder) -> None:
    s = b.sampler
    for _ in range(b.draws):
        p = s.heun_params()
        symbol = he_symbol(p)
        b.add("fuchs:he-symbol", partial(lambda sym: indicator(satisfies_fuchs(sym)), symbol), EXACT_TOL, p)
        m = s.retry(partial(_mobius_draw, b))
        b.add("fuchs:mobius-lift", partial(lambda sym, mm: _fuchs_gap(sym, mobius_lift(sym, mm)), symbol, m), EXACT_TOL, p)
        x0, zeta = SpherePoint(s.param()), s.param()
        b.add(
            "fuchs:f-homotopy",
            partial(lambda sym, pt, z: _fuchs_gap(sym, f_homotopy(sym, pt, z)), symbol, x0, zeta),
            EXACT_TOL,
            {**params_of(p), "zeta": zeta},
        )
        b.add(
            "fuchs:normalize",
            partial(lambda sym, mm: _fuchs_gap(sym, normalize(mobius_lift(sym, mm))[0]), symbol, m),
            EXACT_TOL,
            p,
        )
        m2 = s.retry(partial(_mobius_draw, b))
        b.add(
            "functor:mobius-lift",
            partial(_mobius_functor_check, symbol, m, m2),
            EXACT_TOL,
            p,
        )
        b.add(
            "roundtrip:f-homotopy",
            partial(_f_homotopy_roundtrip_check, symbol, x0, zeta),
            EXACT_TOL,
            {**params_of(p), "zeta": zeta},
        )

    for _ in range(b.draws):
        d = s.retry(partial(_lift_data, b))
        alpha, gamma = s.param(), s.lower()
        b.add(
            "lift:R",
            partial(lambda *args: indicator(quadratic_symbol_check(*args)), d, alpha, gamma),
            EXACT_TOL,
            {"t": d.t, "alpha": alpha, "gamma": gamma},
        )
        a, gamma = s.heun_a(), s.lower()
        b.add(
            "lift:S",
            partial(lambda *args: indicator(biquadratic_symbol_check(*args)), a, gamma),
            EXACT_TOL,
            {"a": a, "gamma": gamma},
        )

    for n in range(4):
        for _ in range(b.draws):
            p = s.heun_params(alpha=1 - n)
            b.add(f"derivative-symbol:N={n}", partial(_derivative_symbol_check, p, n), EXACT_TOL, p)


SuiteFn = Callable[[SuiteBuilder], None]

SUITES: dict[str, SuiteFn] = {
    "gauss": gauss_suite,
    "heun-group": heun_group_suite,
    "quadratic": quadratic_suite,
    "biquadratic": biquadratic_suite,
    "h-dup": h_dup_suite,
    "reduction": reduction_suite,
    "factorization": factorization_suite,
    "f32-pfaff": f32_pfaff_suite,
    "f32-euler": f32_euler_suite,
    "f32-corollaries": f32_corollaries_suite,
    "derivative": derivative_suite,
    "classifier": classifier_suite,
    "psymbol": psymbol_suite,
}
"""Suites in canonical order; the position of a suite seeds its draws."""


def build_suite(name: str, plan: SamplePlan, policy: EvalPolicy) -> list[CaseTask]:
    """Draw every case of a suite (without evaluating any)."""
    index = list(SUITES).index(name)
    builder = SuiteBuilder(name, plan, policy, index)
    SUITES[name](builder)
    return builder.tasks


