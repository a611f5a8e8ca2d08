"""Command-line entry point for heunkit.

    heunkit verify [--suite NAME] [--seed N] [--draws N] [--tol X]
                   [--report PATH] [--config PATH] [--workers N]
                   [--list-rules gauss|heun|3f2] [--explain LABEL]

Exit status: 0 when every case passes, 1 on a verification failure,
2 on a usage or configuration error or when no admissible draw is found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from src.base.exceptions import ConfigurationError, HeunkitError, UnknownRuleError
from src.base.logging import get_logger, setup_logging
from src.config.settings import LOG_LEVELS, load_settings
from src.schemas.report import IdentityReport
from src.verifier.catalog import CATALOGS, explain, list_rules
from src.verifier.runner import run_suites, suite_names

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heunkit",
        description="Verify Heun, 2F1 and 3F2 transformation identities at seeded sample points.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    verify = commands.add_parser("verify", help="Run identity suites, list or explain rules.")
    verify.add_argument(
        "--suite",
        action="append",
        choices=suite_names(),
        metavar="NAME",
        help=f"Suite to run; repeat for several (default: all of {', '.join(suite_names())}).",
    )
    verify.add_argument("--seed", type=int, help="Root seed (default: HEUNKIT_SEED or 0).")
    verify.add_argument("--draws", type=int, help="Draws per rule (default: 20).")
    verify.add_argument("--tol", type=float, help="Tolerance overriding every suite default.")
    verify.add_argument("--report", type=Path, metavar="PATH", help="Write the JSON report here.")
    verify.add_argument("--config", type=Path, metavar="PATH", help="Env-style config file.")
    verify.add_argument("--workers", type=int, help="Threads evaluating the cases of a suite.")
    verify.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, help="Log level (stderr).")
    verify.add_argument("--log-json", action="store_true", default=None, help="Log JSON lines.")
    verify.add_argument("--list-rules", choices=CATALOGS, metavar="FAMILY", help="Print a rule catalog.")
    verify.add_argument(
        "--explain",
        metavar="LABEL",
        help="Print formula and P-symbols of a rule, e.g. '[1+inf+][a+]' or '3f2:[1+inf+]'.",
    )
    return parser


def summary_lines(report: IdentityReport) -> list[str]:
    lines = []
    for name, summary in report.summary.items():
        status = "ok" if summary.failed == 0 else "FAIL"
        lines.append(f"{name:<16} {summary.passed:>6}/{summary.total:<6} {status}")
    total = report.total
    lines.append(f"{'total':<16} {total.passed:>6}/{total.total:<6} {'ok' if report.ok else 'FAIL'}")
    return lines


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the requested action and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = load_settings(
            args.config,
            SEED=args.seed,
            DRAWS=args.draws,
            TOLERANCE=args.tol,
            WORKERS=args.workers,
            REPORT_PATH=args.report,
            LOG_LEVEL=args.log_level,
            LOG_JSON=args.log_json,
        )
    except ConfigurationError as exc:
        print(f"heunkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(level=settings.LOG_LEVEL, json_output=settings.LOG_JSON)

    if args.list_rules:
        print(list_rules(args.list_rules))
        return EXIT_OK
    if args.explain:
        try:
            print(explain(args.explain))
        except UnknownRuleError as exc:
            print(f"heunkit: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK

    try:
        report = run_suites(
            args.suite or suite_names(),
            settings.sample_plan(),
            settings.eval_policy(),
            settings.WORKERS,
        )
    except HeunkitError as exc:
        logger.error("Verification aborted", error=str(exc))
        print(f"heunkit: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if settings.REPORT_PATH is not None:
        settings.REPORT_PATH.write_text(report.to_json(), encoding="utf-8")
        total = report.total
        print(f"report written to {settings.REPORT_PATH} ({total.passed}/{total.total} passed)")
    else:
        print("\n".join(summary_lines(report)))
    logger.info("Verification finished", ok=report.ok, failed=report.total.failed)
    return EXIT_OK if report.ok else EXIT_FAILED


def run() -> int:
    """Console-script wrapper around :func:`main`."""
    try:
        return main()
    except KeyboardInterrupt:
        logger.info("Interrupted by user (Ctrl+C)")
        return 130


if __name__ == "__main__":
    sys.exit(run())
