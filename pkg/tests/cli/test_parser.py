"""Argument parsing tests."""

from __future__ import annotations

from pathlib import Path

import pytest

from rcftkit.cli.parser import DEFAULT_LOG_FILE, parse_args


def test_leaf_command_with_json() -> None:
    args = parse_args(["invariants", "su2", "--k", "10", "--json"])
    assert (args.group, args.command, args.k, args.json) == (
        "invariants",
        "su2",
        10,
        True,
    )


def test_global_options_come_first() -> None:
    args = parse_args(["--format", "csv", "-v", "moonshine", "j", "--nmax", "5"])
    assert args.format == "csv"
    assert args.verbose
    assert args.nmax == 5
    assert args.log_file is None


def test_log_file_without_a_path_uses_the_default() -> None:
    args = parse_args(["--log-file", "-v", "moonshine", "order"])
    assert args.log_file == DEFAULT_LOG_FILE


def test_file_arguments_are_paths() -> None:
    args = parse_args(["invariants", "hetero", "--left", "a.json", "--right", "b"])
    assert args.left == Path("a.json")
    assert parse_args(["mtc", "check", "x.json"]).file == Path("x.json")


def test_classify_vir_flags() -> None:
    args = parse_args(["classify", "vir", "--m", "11", "--full-cft", "--boundary"])
    assert args.full_cft and args.boundary


def test_mckay_defaults_to_three_terms() -> None:
    assert parse_args(["moonshine", "mckay"]).terms == 3


def test_jones_takes_n_or_test() -> None:
    assert parse_args(["index", "jones", "--n", "8"]).n == 8
    assert parse_args(["index", "jones", "--test", "3.5"]).test == 3.5


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["model"],
        ["model", "su2"],
        ["index", "jones"],
        ["index", "jones", "--n", "5", "--test", "2"],
        ["--format", "xml", "moonshine", "order"],
    ],
)
def test_usage_errors_exit_with_two(argv) -> None:
    with pytest.raises(SystemExit) as info:
        parse_args(argv)
    assert info.value.code == 2


def test_golden_record_keeps_the_command() -> None:
    argv = ["golden", "record", "--dir", "g", "moonshine", "j", "--nmax", "5"]
    args = parse_args(argv)
    assert args.dir == Path("g")
    assert args.argv == ["moonshine", "j", "--nmax", "5"]
