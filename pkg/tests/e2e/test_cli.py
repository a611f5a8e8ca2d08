"""End-to-end tests of the heunkit command line."""

import json
from pathlib import Path

import pytest
from pytest_mock import MockerFixture

from src.base.exceptions import HeunkitError
from src.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Run from an empty directory so no stray .env is picked up."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.mark.e2e
class TestVerify:
    """Tests for running suites from the command line."""

    def test_passing_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["verify", "--suite", "gauss", "--draws", "2", "--seed", "3"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[0].startswith("gauss")
        assert out[-1].startswith("total")
        assert out[-1].endswith("ok")

    def test_zero_tolerance_fails(self) -> None:
        assert main(["verify", "--suite", "h-dup", "--draws", "1", "--tol", "0"]) == EXIT_FAILED

    def test_report_file(self, isolated_cwd: Path, capsys: pytest.CaptureFixture[str]) -> None:
        target = isolated_cwd / "report.json"
        args = ["verify", "--suite", "h-dup", "--suite", "gauss", "--draws", "1", "--report", str(target)]
        assert main(args) == EXIT_OK
        assert "report written to" in capsys.readouterr().out
        data = json.loads(target.read_text(encoding="utf-8"))
        assert list(data["suites"]) == ["h-dup", "gauss"]
        assert data["plan"]["draws_per_rule"] == 1

    def test_config_file(self, isolated_cwd: Path) -> None:
        config = isolated_cwd / "run.env"
        config.write_text("HEUNKIT_DRAWS=1\nHEUNKIT_SEED=9\n", encoding="utf-8")
        target = isolated_cwd / "report.json"
        assert main(["verify", "--suite", "h-dup", "--config", str(config), "--report", str(target)]) == EXIT_OK
        assert json.loads(target.read_text(encoding="utf-8"))["plan"]["seed"] == 9


@pytest.mark.e2e
class TestCatalogCommands:
    """Tests for --list-rules and --explain."""

    def test_list_rules(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["verify", "--list-rules", "gauss"]) == EXIT_OK
        assert "[1+inf+]" in capsys.readouterr().out

    def test_explain(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["verify", "--explain", "[1+inf+]"]) == EXIT_OK
        assert "rule [1+inf+] (gauss)" in capsys.readouterr().out

    def test_explain_bad_label(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["verify", "--explain", "[1+a+]"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("heunkit:")


@pytest.mark.e2e
class TestUsageErrors:
    """Tests for exit status 2."""

    def test_unknown_suite(self) -> None:
        assert main(["verify", "--suite", "nope"]) == EXIT_USAGE

    def test_missing_config(self, isolated_cwd: Path) -> None:
        assert main(["verify", "--config", str(isolated_cwd / "absent.env")]) == EXIT_USAGE

    def test_invalid_draws(self) -> None:
        assert main(["verify", "--suite", "gauss", "--draws", "0"]) == EXIT_USAGE

    def test_missing_command(self) -> None:
        assert main([]) == EXIT_USAGE

    def test_sampling_exhaustion_is_a_usage_error(
        self, mocker: MockerFixture, capsys: pytest.CaptureFixture[str]
    ) -> None:
        mocker.patch(
            "src.main.run_suites",
            side_effect=HeunkitError("no admissible draw after 1000 attempts"),
        )
        assert main(["verify", "--suite", "gauss"]) == EXIT_USAGE
        assert "no admissible draw" in capsys.readouterr().err
