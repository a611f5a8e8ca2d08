"""Unit tests for the test runner script."""

from pathlib import Path
from types import SimpleNamespace

import pytest

from scripts import run_tests


@pytest.mark.unit
class TestBuildPytestArgs:
    """Tests for build_pytest_args."""

    def test_default_skips_slow(self) -> None:
        args = run_tests.build_pytest_args()
        assert args[args.index("-m") + 1] == "not slow"
        assert args[-1] == "tests/"

    def test_marker_and_slow(self) -> None:
        args = run_tests.build_pytest_args("unit", include_slow=False)
        assert args[args.index("-m") + 1] == "unit and not slow"
        args = run_tests.build_pytest_args("all", include_slow=True)
        assert "-m" not in args

    def test_coverage(self) -> None:
        assert "--cov=src" in run_tests.build_pytest_args(coverage=True)


@pytest.mark.unit
class TestRunTests:
    """Tests for run_tests with pytest mocked out."""

    def test_writes_report(self, tmp_path: Path, mocker) -> None:
        mocker.patch.object(run_tests, "get_reports_dir", return_value=tmp_path)
        run = mocker.patch.object(
            run_tests.subprocess, "run", return_value=SimpleNamespace(returncode=1, stdout="1 failed\n", stderr="")
        )
        code, report = run_tests.run_tests(["pytest", "-q", "tests/"])
        assert code == 1
        assert run.call_args.args[0] == ["pytest", "-q", "tests/"]
        assert "1 failed" in report.read_text(encoding="utf-8")
        assert (tmp_path / "latest.txt").resolve() == report.resolve()
