"""Run identity suites and assemble the verification report."""

from __future__ import annotations

import math
import time
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor

from heunkit import __version__
from src.base.decorators import measure_time
from src.base.exceptions import HeunkitError, UnknownSuiteError
from src.base.logging import get_logger
from src.kernel.params import EvalPolicy
from src.kernel.series import DEFAULT_POLICY
from src.schemas.report import (
    IdentityCase,
    IdentityReport,
    ReportMeta,
    SamplePlan,
    SuiteSummary,
    Verdict,
)
from src.verifier.suites import SUITES, CaseTask, build_suite

logger = get_logger(__name__)


def suite_names() -> list[str]:
    return list(SUITES)


def evaluate_case(suite: str, task: CaseTask, tolerance: float | None = None) -> IdentityCase:
    """Run one check; a HeunkitError fails the case instead of the suite."""
    tol = task.tolerance if tolerance is None else tolerance
    error: str | None = None
    try:
        residual = float(task.check())
    except (HeunkitError, ArithmeticError) as exc:
        residual = math.inf
        error = f"{type(exc).__name__}: {exc}"
    case = IdentityCase.judge(
        suite=suite,
        rule=task.rule,
        index=task.index,
        residual=residual,
        tolerance=tol,
        params=task.params,
        point=task.point,
        error=error,
    )
    if case.verdict == Verdict.FAIL:
        logger.warning(
            "Identity case failed",
            suite=suite,
            rule=task.rule,
            index=task.index,
            residual=residual,
            tolerance=tol,
            error=error,
        )
    return case


def _evaluate_suite(
    name: str,
    plan: SamplePlan,
    policy: EvalPolicy,
    workers: int,
) -> list[IdentityCase]:
    tasks = build_suite(name, plan, policy)
    logger.info("Suite started", suite=name, cases=len(tasks), workers=workers)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(lambda t: evaluate_case(name, t, plan.tolerance), tasks))
    else:
        cases = [evaluate_case(name, t, plan.tolerance) for t in tasks]
    summary = SuiteSummary.of(cases)
    logger.info("Suite finished", suite=name, passed=summary.passed, failed=summary.failed)
    return cases


def run_suites(
    names: Iterable[str],
    plan: SamplePlan,
    policy: EvalPolicy = DEFAULT_POLICY,
    workers: int = 1,
) -> IdentityReport:
    """Run the named suites in order and assemble one report.

    Raises:
        UnknownSuiteError: A name is not a registered suite.
    """
    names = list(names)
    for name in names:
        if name not in SUITES:
            raise UnknownSuiteError(f"unknown suite {name!r}; choose from {suite_names()}", suite=name)

    started = time.perf_counter()
    suites: dict[str, list[IdentityCase]] = {}
    wall_ms: dict[str, float] = {}
    for name in names:
        t0 = time.perf_counter()
        timed = measure_time(f"suite:{name}", log_level="INFO")(_evaluate_suite)
        suites[name] = timed(name, plan, policy, workers)
        wall_ms[name] = (time.perf_counter() - t0) * 1000

    meta = ReportMeta(wall_time_s=time.perf_counter() - started, suite_wall_ms=wall_ms)
    return IdentityReport.assemble(__version__, plan, suites, meta)


def run_suite(
    name: str,
    plan: SamplePlan,
    policy: EvalPolicy = DEFAULT_POLICY,
    workers: int = 1,
) -> IdentityReport:
    """Report of a single suite.

    Raises:
        UnknownSuiteError: ``name`` is not a registered suite.
    """
    return run_suites([name], plan, policy, workers)


def run_all(plan: SamplePlan, policy: EvalPolicy = DEFAULT_POLICY, workers: int = 1) -> IdentityReport:
    """Report of every suite, in canonical order."""
    return run_suites(suite_names(), plan, policy, workers)
