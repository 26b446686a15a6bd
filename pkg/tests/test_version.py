"""Version module tests."""

from __future__ import annotations

from pathlib import Path

from rcftkit.version import (
    FALLBACK_VERSION,
    VERSION_FILENAME,
    __version__,
    _candidate_dirs,
    read_version,
)

PROJECT_ROOT = Path(__file__).resolve().parents[1]


def test_dunder_version_matches_version_file() -> None:
    canonical = (PROJECT_ROOT / VERSION_FILENAME).read_text("utf-8").strip()
    assert __version__ == canonical


def test_read_version_from_explicit_dir(tmp_path) -> None:
    (tmp_path / VERSION_FILENAME).write_text("9.9.9\n", encoding="utf-8")
    assert read_version((tmp_path,)) == "9.9.9"


def test_read_version_skips_empty_file(tmp_path) -> None:
    (tmp_path / VERSION_FILENAME).write_text("  \n", encoding="utf-8")
    assert read_version((tmp_path,)) == FALLBACK_VERSION


def test_read_version_first_directory_wins(tmp_path) -> None:
    first, second = tmp_path / "a", tmp_path / "b"
    first.mkdir()
    second.mkdir()
    (second / VERSION_FILENAME).write_text("2.0.0", encoding="utf-8")
    (first / VERSION_FILENAME).write_text("1.0.0", encoding="utf-8")
    assert read_version((first, second)) == "1.0.0"


def test_read_version_missing_returns_fallback(tmp_path) -> None:
    assert read_version((tmp_path,)) == FALLBACK_VERSION


def test_candidate_dirs_start_at_the_repo_root(monkeypatch, tmp_path) -> None:
    monkeypatch.chdir(tmp_path)
    assert _candidate_dirs() == (PROJECT_ROOT, tmp_path.resolve())
