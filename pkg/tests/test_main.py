"""Composition-root tests: the real adapters wired end to end."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from rcftkit.main import EXIT_OK, EXIT_USAGE, main, run

GOLDEN_DIR = Path(__file__).resolve().parents[1] / "golden"


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch):
    monkeypatch.setattr("rcftkit.main.setup_logging", lambda *args, **kwargs: [])


def test_mckay_with_the_packaged_catalog(tmp_path, capsys) -> None:
    config = tmp_path / "config.json"
    config.write_text('{"output_format": "json"}', encoding="utf-8")
    assert run(["--config", str(config), "moonshine", "mckay"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["module_matches_J"] is True


def test_model_file_round_trip(tmp_path, capsys) -> None:
    assert run(["model", "su2", "--k", "2", "--json"]) == EXIT_OK
    path = tmp_path / "su2_2.json"
    path.write_text(capsys.readouterr().out, encoding="utf-8")
    assert run(["mtc", "check", str(path), "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["passed"] is True


def test_version_and_usage(capsys) -> None:
    assert run(["--version"]) == EXIT_OK
    assert "rcftkit" in capsys.readouterr().out
    assert run(["no-such-group"]) == EXIT_USAGE


def test_main_reads_sys_argv(monkeypatch, capsys) -> None:
    monkeypatch.setattr("sys.argv", ["rcftkit", "index", "jones", "--test", "2"])
    assert main() == EXIT_OK
    assert "index-test" in capsys.readouterr().out


def test_committed_golden_records_replay(tmp_path, capsys) -> None:
    config = tmp_path / "config.json"
    config.write_text("{}", encoding="utf-8")
    command = ["--config", str(config), "golden", "verify", "--dir", str(GOLDEN_DIR)]
    assert run([*command, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["checked"] >= 11
    assert payload["mismatches"] == []


def test_committed_boundary_counts() -> None:
    counts = []
    for m in range(3, 13):
        record = json.loads(
            (GOLDEN_DIR / f"classify-boundary-m-{m}.json").read_text(encoding="utf-8")
        )
        assert record["command"] == ["classify", "boundary", "--m", str(m)]
        counts.append(json.loads(record["output"])["count"])
    assert counts == [2, 4, 10, 15, 24, 32, 40, 50, 80, 96]
