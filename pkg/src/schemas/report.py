"""
Verification report schemas for heunkit.

This module defines Pydantic v2 schemas for sampled identity cases, the
sampling plan that produced them and the report assembled from one or
more suites.
"""

from datetime import datetime, timezone
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_SEED = 2**64 - 1


class Verdict(str, Enum):
    """Outcome of a single identity case."""

    PASS = "pass"
    FAIL = "fail"


class SamplePlan(BaseModel):
    """How parameter and point draws are generated.

    Attributes:
        seed: Root seed; equal seeds give identical draws.
        draws_per_rule: Draws per rule or per identity.
        param_bound: Half-width of the complex sampling rectangle.
        x_fraction: Fraction of the convergence radius points are drawn from.
        tolerance: Overrides every suite tolerance when set.
    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(default=0, ge=0, le=MAX_SEED, description="Root seed")
    draws_per_rule: int = Field(default=20, ge=1, description="Draws per rule")
    param_bound: float = Field(default=2.0, gt=0, description="Parameter modulus bound")
    x_fraction: float = Field(default=0.2, gt=0, lt=1, description="Point radius fraction")
    tolerance: float | None = Field(default=None, ge=0, description="Tolerance override")


class IdentityCase(BaseModel):
    """One evaluated identity instance.

    Attributes:
        suite: Suite that produced the case.
        rule: Rule label or identity name.
        index: Draw index inside the suite; fixes case order.
        params: Parameter draw as name -> [re, im].
        point: Evaluation point as [re, im], if any.
        residual: Relative residual (inf when the case raised).
        tolerance: Threshold the residual was judged against.
        verdict: pass iff residual <= tolerance.
        error: Exception summary when the case raised.
    """

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants", use_enum_values=False)

    suite: str
    rule: str
    index: int = Field(ge=0)
    params: dict[str, tuple[float, float]] = Field(default_factory=dict)
    point: tuple[float, float] | None = None
    residual: float
    tolerance: float = Field(ge=0)
    verdict: Verdict
    error: str | None = None

    @model_validator(mode="after")
    def check_verdict(self) -> "IdentityCase":
        passed = self.error is None and self.residual <= self.tolerance
        if passed != (self.verdict == Verdict.PASS):
            raise ValueError("verdict must be pass exactly when residual <= tolerance")
        return self

    @classmethod
    def judge(
        cls,
        *,
        suite: str,
        rule: str,
        index: int,
        residual: float,
        tolerance: float,
        params: dict[str, Any] | None = None,
        point: complex | None = None,
        error: str | None = None,
    ) -> "IdentityCase":
        """Build a case, deriving the verdict from residual and tolerance."""
        ok = error is None and residual <= tolerance
        return cls(
            suite=suite,
            rule=rule,
            index=index,
            params={k: _pair(v) for k, v in (params or {}).items()},
            point=None if point is None else _pair(point),
            residual=residual,
            tolerance=tolerance,
            verdict=Verdict.PASS if ok else Verdict.FAIL,
            error=error,
        )


def _pair(value: Any) -> tuple[float, float]:
    z = complex(value)
    return (z.real, z.imag)


class SuiteSummary(BaseModel):
    """Case tallies of one suite."""

    model_config = ConfigDict(frozen=True)

    total: int = Field(ge=0)
    passed: int = Field(ge=0)
    failed: int = Field(ge=0)

    @classmethod
    def of(cls, cases: list[IdentityCase]) -> "SuiteSummary":
        passed = sum(1 for c in cases if c.verdict == Verdict.PASS)
        return cls(total=len(cases), passed=passed, failed=len(cases) - passed)


class ReportMeta(BaseModel):
    """Run metadata outside the determinism contract."""

    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    wall_time_s: float = Field(default=0.0, ge=0)
    suite_wall_ms: dict[str, float] = Field(default_factory=dict)


class IdentityReport(BaseModel):
    """Cases and tallies of one or more suites.

    Attributes:
        tool_version: heunkit version that produced the report.
        plan: Sampling plan of the run.
        suites: Cases per suite, ordered by draw index.
        summary: Tallies per suite.
        meta: Timestamp and timings.
    """

    model_config = ConfigDict(ser_json_inf_nan="constants")

    tool_version: str
    plan: SamplePlan
    suites: dict[str, list[IdentityCase]] = Field(default_factory=dict)
    summary: dict[str, SuiteSummary] = Field(default_factory=dict)
    meta: ReportMeta = Field(default_factory=ReportMeta)

    @model_validator(mode="after")
    def check_summary(self) -> "IdentityReport":
        if set(self.summary) != set(self.suites):
            raise ValueError("summary and suites must name the same suites")
        for name, cases in self.suites.items():
            if self.summary[name] != SuiteSummary.of(cases):
                raise ValueError(f"summary of suite {name} does not match its cases")
        return self

    @classmethod
    def assemble(
        cls,
        tool_version: str,
        plan: SamplePlan,
        suites: dict[str, list[IdentityCase]],
        meta: ReportMeta | None = None,
    ) -> "IdentityReport":
        ordered = {name: sorted(cases, key=lambda c: c.index) for name, cases in suites.items()}
        return cls(
            tool_version=tool_version,
            plan=plan,
            suites=ordered,
            summary={name: SuiteSummary.of(cases) for name, cases in ordered.items()},
            meta=meta or ReportMeta(),
        )

    @property
    def total(self) -> SuiteSummary:
        return SuiteSummary.of([c for cases in self.suites.values() for c in cases])

    @property
    def ok(self) -> bool:
        return self.total.failed == 0

    def failures(self) -> list[IdentityCase]:
        return [c for cases in self.suites.values() for c in cases if c.verdict == Verdict.FAIL]

    def deterministic_dump(self) -> dict[str, Any]:
        """Everything except ``meta``."""
        return self.model_dump(mode="json", exclude={"meta"})

    def to_json(self, indent: int | None = 2) -> str:
        return self.model_dump_json(indent=indent)
