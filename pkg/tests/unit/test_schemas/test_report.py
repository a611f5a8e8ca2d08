"""Unit tests for the report schemas."""

import json
import math

import pytest
from pydantic import ValidationError

from src.schemas.report import (
    IdentityCase,
    IdentityReport,
    ReportMeta,
    SamplePlan,
    SuiteSummary,
    Verdict,
)


def _case(index: int, residual: float, suite: str = "gauss", error: str | None = None) -> IdentityCase:
    return IdentityCase.judge(suite=suite, rule="[1+inf+]", index=index, residual=residual, tolerance=1e-9, error=error)


@pytest.mark.unit
class TestSamplePlan:
    """Tests for SamplePlan validation."""

    def test_defaults(self) -> None:
        plan = SamplePlan()
        assert plan.seed == 0
        assert plan.draws_per_rule == 20
        assert plan.tolerance is None

    @pytest.mark.parametrize(
        "kwargs",
        [{"seed": -1}, {"draws_per_rule": 0}, {"x_fraction": 1.0}, {"param_bound": 0}, {"tolerance": -1e-9}],
    )
    def test_rejects(self, kwargs: dict) -> None:
        with pytest.raises(ValidationError):
            SamplePlan(**kwargs)

    def test_frozen(self) -> None:
        with pytest.raises(ValidationError):
            SamplePlan().seed = 3  # type: ignore[misc]


@pytest.mark.unit
class TestIdentityCase:
    """Tests for IdentityCase.judge and its verdict check."""

    def test_pass_and_fail(self) -> None:
        assert _case(0, 1e-12).verdict is Verdict.PASS
        assert _case(0, 1e-3).verdict is Verdict.FAIL
        assert _case(0, 1e-9).verdict is Verdict.PASS

    def test_error_fails(self) -> None:
        case = _case(0, math.inf, error="DomainError: outside disk")
        assert case.verdict is Verdict.FAIL
        assert case.error.startswith("DomainError")

    def test_complex_values_become_pairs(self) -> None:
        case = IdentityCase.judge(
            suite="gauss", rule="r", index=0, residual=0.0, tolerance=1e-9, params={"alpha": 0.5 - 2j}, point=0.1j
        )
        assert case.params == {"alpha": (0.5, -2.0)}
        assert case.point == (0.0, 0.1)

    def test_inconsistent_verdict_rejected(self) -> None:
        with pytest.raises(ValidationError, match="verdict"):
            IdentityCase(suite="gauss", rule="r", index=0, residual=1.0, tolerance=1e-9, verdict=Verdict.PASS)


@pytest.mark.unit
class TestIdentityReport:
    """Tests for report assembly and serialization."""

    def test_assemble_orders_cases(self) -> None:
        report = IdentityReport.assemble("0.1.0", SamplePlan(), {"gauss": [_case(2, 0.0), _case(0, 0.0), _case(1, 1.0)]})
        assert [c.index for c in report.suites["gauss"]] == [0, 1, 2]
        assert report.summary["gauss"] == SuiteSummary(total=3, passed=2, failed=1)
        assert not report.ok
        assert [c.index for c in report.failures()] == [1]

    def test_totals_across_suites(self) -> None:
        report = IdentityReport.assemble(
            "0.1.0", SamplePlan(), {"gauss": [_case(0, 0.0)], "h-dup": [_case(0, 0.0, suite="h-dup")]}
        )
        assert report.total == SuiteSummary(total=2, passed=2, failed=0)
        assert report.ok

    def test_summary_must_match(self) -> None:
        with pytest.raises(ValidationError):
            IdentityReport(
                tool_version="0.1.0",
                plan=SamplePlan(),
                suites={"gauss": [_case(0, 0.0)]},
                summary={"gauss": SuiteSummary(total=1, passed=0, failed=1)},
            )

    def test_deterministic_dump_ignores_meta(self) -> None:
        suites = {"gauss": [_case(0, 0.0)]}
        first = IdentityReport.assemble("0.1.0", SamplePlan(seed=5), suites, ReportMeta(wall_time_s=1.0))
        second = IdentityReport.assemble("0.1.0", SamplePlan(seed=5), suites, ReportMeta(wall_time_s=7.5))
        assert first.deterministic_dump() == second.deterministic_dump()
        assert "meta" not in first.deterministic_dump()

    def test_json_round_trip(self) -> None:
        report = IdentityReport.assemble(
            "0.1.0", SamplePlan(seed=3), {"gauss": [_case(0, 0.0), _case(1, math.inf, error="boom")]}
        )
        data = json.loads(report.to_json())
        assert data["plan"]["seed"] == 3
        assert data["summary"]["gauss"]["failed"] == 1
        assert data["suites"]["gauss"][1]["verdict"] == "fail"
        assert "timestamp" in data["meta"]
