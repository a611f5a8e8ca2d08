"""Seeded identity suites and the runner that turns them into reports."""

from src.verifier.runner import evaluate_case, run_all, run_suite, run_suites, suite_names
from src.verifier.sampling import Sampler, shrink_point, suite_rng
from src.verifier.suites import SUITES, CaseTask, build_suite

__all__ = [
    "SUITES",
    "CaseTask",
    "Sampler",
    "build_suite",
    "evaluate_case",
    "run_all",
    "run_suite",
    "run_suites",
    "shrink_point",
    "suite_names",
    "suite_rng",
]
