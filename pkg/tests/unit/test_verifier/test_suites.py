"""Unit tests for suite construction and case evaluation."""

import math

import pytest

from src.base.exceptions import DomainError
from src.kernel.params import EvalPolicy
from src.schemas.report import SamplePlan, Verdict
from src.verifier.runner import evaluate_case
from src.verifier.suites import SUITES, CaseTask, build_suite


@pytest.mark.unit
class TestBuildSuite:
    """Tests for build_suite."""

    def test_canonical_order(self) -> None:
        assert list(SUITES)[:3] == ["gauss", "heun-group", "quadratic"]
        assert list(SUITES)[-1] == "psymbol"
        assert len(SUITES) == 13

    def test_indices_are_sequential(self, small_plan: SamplePlan, policy: EvalPolicy) -> None:
        tasks = build_suite("gauss", small_plan, policy)
        assert [t.index for t in tasks] == list(range(len(tasks)))

    def test_draws_are_reproducible(self, policy: EvalPolicy) -> None:
        plan = SamplePlan(seed=5, draws_per_rule=2)
        first = build_suite("h-dup", plan, policy)
        second = build_suite("h-dup", plan, policy)
        assert [(t.rule, t.params, t.point) for t in first] == [(t.rule, t.params, t.point) for t in second]

    def test_seed_changes_draws(self, policy: EvalPolicy) -> None:
        first = build_suite("h-dup", SamplePlan(seed=5, draws_per_rule=2), policy)
        second = build_suite("h-dup", SamplePlan(seed=6, draws_per_rule=2), policy)
        assert [t.params for t in first] != [t.params for t in second]

    def test_draw_count_scales(self, policy: EvalPolicy) -> None:
        one = build_suite("gauss", SamplePlan(seed=1, draws_per_rule=1), policy)
        two = build_suite("gauss", SamplePlan(seed=1, draws_per_rule=2), policy)
        assert len(two) - len(one) == 8


@pytest.mark.unit
class TestEvaluateCase:
    """Tests for evaluate_case."""

    def test_pass(self) -> None:
        case = evaluate_case("gauss", CaseTask("r", 0, lambda: 1e-13, 1e-9))
        assert case.verdict is Verdict.PASS
        assert case.error is None

    def test_fail(self) -> None:
        case = evaluate_case("gauss", CaseTask("r", 4, lambda: 1e-3, 1e-9, {"alpha": 0.5j}, 0.1))
        assert case.verdict is Verdict.FAIL
        assert case.index == 4
        assert case.params == {"alpha": (0.0, 0.5)}

    def test_error_becomes_failure(self) -> None:
        def check() -> float:
            raise DomainError("outside the disk", point=2.0)

        case = evaluate_case("gauss", CaseTask("r", 0, check, 1e-9))
        assert case.verdict is Verdict.FAIL
        assert math.isinf(case.residual)
        assert case.error.startswith("DomainError: outside the disk")

    def test_arithmetic_error(self) -> None:
        case = evaluate_case("gauss", CaseTask("r", 0, lambda: 1 / 0, 1e-9))
        assert case.error.startswith("ZeroDivisionError")

    def test_tolerance_override(self) -> None:
        task = CaseTask("r", 0, lambda: 1e-6, 1e-9)
        assert evaluate_case("gauss", task, tolerance=1e-5).verdict is Verdict.PASS
        assert evaluate_case("gauss", task, tolerance=1e-5).tolerance == 1e-5
