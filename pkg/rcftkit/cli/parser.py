"""Argument parsing for the ``rcftkit`` command."""

from __future__ import annotations

import argparse
from pathlib import Path

from rcftkit.application.config import OUTPUT_FORMATS
from rcftkit.version import __version__

# ``--log-file`` given without a path: the composition root picks the
# per-user log location.
DEFAULT_LOG_FILE = ""


def _leaf(
    group: argparse._SubParsersAction, name: str, help_text: str
) -> argparse.ArgumentParser:
    parser = group.add_parser(name, help=help_text)
    parser.add_argument(
        "--json", action="store_true", help="Emit canonical JSON on stdout"
    )
    return parser


def _model(commands: argparse._SubParsersAction) -> None:
    group = commands.add_parser("model", help="Modular data of a shipped model")
    kinds = group.add_subparsers(dest="command", required=True)
    _leaf(kinds, "su2", "SU(2) at level k").add_argument("--k", type=int, required=True)
    _leaf(kinds, "minimal", "Virasoro minimal model m").add_argument(
        "--m", type=int, required=True
    )


def _checks(commands: argparse._SubParsersAction) -> None:
    fusion = commands.add_parser("fusion", help="Fusion-ring documents")
    fusion_cmds = fusion.add_subparsers(dest="command", required=True)
    _leaf(fusion_cmds, "check", "Report violated ring axioms").add_argument(
        "file", type=Path
    )
    mtc = commands.add_parser("mtc", help="Modular-data documents")
    mtc_cmds = mtc.add_subparsers(dest="command", required=True)
    _leaf(mtc_cmds, "check", "Report the SL(2,Z) relation residuals").add_argument(
        "file", type=Path
    )


def _invariants(commands: argparse._SubParsersAction) -> None:
    group = commands.add_parser("invariants", help="Enumerate modular invariants")
    kinds = group.add_subparsers(dest="command", required=True)
    _leaf(kinds, "su2", "Invariants of SU(2)_k").add_argument(
        "--k", type=int, required=True
    )
    _leaf(kinds, "minimal", "Invariants of minimal model m").add_argument(
        "--m", type=int, required=True
    )
    hetero = _leaf(kinds, "hetero", "Coupling matrices between two documents")
    hetero.add_argument("--left", type=Path, required=True)
    hetero.add_argument("--right", type=Path, required=True)


def _classify(commands: argparse._SubParsersAction) -> None:
    group = commands.add_parser("classify", help="Extension and ADE classification")
    kinds = group.add_subparsers(dest="command", required=True)
    _leaf(kinds, "su2", "Theta candidates of SU(2)_k").add_argument(
        "--k", type=int, required=True
    )
    vir = _leaf(kinds, "vir", "Theta candidates of minimal model m")
    vir.add_argument("--m", type=int, required=True)
    vir.add_argument(
        "--full-cft", action="store_true", help="Add the ADE pairs of full theories"
    )
    vir.add_argument(
        "--boundary", action="store_true", help="Add the boundary quadruple count"
    )
    _leaf(kinds, "boundary", "Boundary quadruples only").add_argument(
        "--m", type=int, required=True
    )


def _moonshine(commands: argparse._SubParsersAction) -> None:
    group = commands.add_parser("moonshine", help="j, J and Monster data")
    kinds = group.add_subparsers(dest="command", required=True)
    _leaf(kinds, "j", "Coefficients of j").add_argument(
        "--nmax", type=int, required=True
    )
    _leaf(kinds, "J", "Coefficients of J = j - 744").add_argument(
        "--nmax", type=int, required=True
    )
    _leaf(kinds, "mckay", "Decompose J coefficients into irreps").add_argument(
        "--terms", type=int, default=3
    )
    _leaf(kinds, "order", "Order of the Monster")


def _index(commands: argparse._SubParsersAction) -> None:
    group = commands.add_parser("index", help="Jones index values")
    kinds = group.add_subparsers(dest="command", required=True)
    jones = _leaf(kinds, "jones", "Discrete index values or a membership test")
    choice = jones.add_mutually_exclusive_group(required=True)
    choice.add_argument("--n", type=int, help="List 4cos^2(pi/n) for n = 3..N")
    choice.add_argument("--test", type=float, help="Test whether X is an index")


def _golden(commands: argparse._SubParsersAction) -> None:
    group = commands.add_parser("golden", help="Recorded reference outputs")
    kinds = group.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("verify", "Replay every record and compare hashes"),
        ("record-defaults", "Record the standard reference set"),
    ):
        _leaf(kinds, name, help_text).add_argument("--dir", type=Path, default=None)
    record = _leaf(kinds, "record", "Record one command")
    record.add_argument("--dir", type=Path, default=None)
    record.add_argument("argv", nargs=argparse.REMAINDER, help="Command to record")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rcftkit",
        description="Modular data, modular invariants and extensions of RCFTs.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    parser.add_argument("--config", type=Path, default=None, help="Config file")
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Verbose logging (DEBUG)."
    )
    parser.add_argument(
        "--log-file",
        nargs="?",
        const=DEFAULT_LOG_FILE,
        default=None,
        help="Also log to a file (default location when no path is given)",
    )
    commands = parser.add_subparsers(dest="group", required=True)
    for add in (_model, _checks, _invariants, _classify, _moonshine, _index, _golden):
        add(commands)
    return parser


def parse_args(argv: list[str]) -> argparse.Namespace:
    return build_parser().parse_args(argv)
