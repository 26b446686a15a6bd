"""Dispatch of parsed commands and the exit-code contract.

0 success, 1 a check reported failure, 2 usage error (bad arguments,
unreadable input, domain preconditions), 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import io
import logging
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import TextIO

from rcftkit.application.computations import ComputationService
from rcftkit.application.golden import GoldenService
from rcftkit.application.ports import GoldenStore
from rcftkit.application.reports import Report, golden_report
from rcftkit.cli.parser import parse_args
from rcftkit.cli.render import render
from rcftkit.domain.invariant_search import SearchBudgetExceeded

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

GoldenStoreFactory = Callable[[Path], GoldenStore]


class CliApp:
    """Runs one command against the computation service and writes its report."""

    def __init__(
        self,
        computations: ComputationService,
        golden_stores: GoldenStoreFactory,
        stdout: TextIO,
        stderr: TextIO,
    ) -> None:
        self._computations = computations
        self._golden_stores = golden_stores
        self._stdout = stdout
        self._stderr = stderr

    def run(self, argv: Sequence[str]) -> int:
        try:
            args = parse_args(list(argv))
        except SystemExit as exc:
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
        return self.execute(args)

    def capture(self, argv: Sequence[str]) -> tuple[int, str]:
        """Run ``argv`` with ``--json`` and return the exit code and output text."""
        buffer = io.StringIO()
        app = CliApp(self._computations, self._golden_stores, buffer, self._stderr)
        code = app.run([*argv, "--json"])
        return code, buffer.getvalue().strip()

    def execute(self, args: argparse.Namespace) -> int:
        try:
            report = self._dispatch(args)
        except SearchBudgetExceeded as exc:
            logger.debug("search stopped", exc_info=True)
            self._stderr.write(f"error: {exc}\n")
            return EXIT_BUDGET
        except ValueError as exc:
            logger.debug("command rejected", exc_info=True)
            self._stderr.write(f"error: {exc}\n")
            return EXIT_USAGE
        fmt = args.format or self._computations.config.output_format
        if args.json:
            fmt = "json"
        render(report, fmt, self._stdout)
        return EXIT_OK if report.passed else EXIT_FAILED_CHECK

    def _golden(self, args: argparse.Namespace) -> GoldenService:
        directory = args.dir or Path(self._computations.config.golden_dir)
        return GoldenService(self._golden_stores(directory), self.capture)

    def _dispatch(self, args: argparse.Namespace) -> Report:
        service = self._computations
        key = (args.group, args.command)
        if key == ("model", "su2"):
            return service.su2_model(args.k)
        if key == ("model", "minimal"):
            return service.minimal_model(args.m)
        if key == ("fusion", "check"):
            return service.fusion_check(args.file)
        if key == ("mtc", "check"):
            return service.mtc_check(args.file)
        if key == ("invariants", "su2"):
            return service.su2_invariants(args.k)
        if key == ("invariants", "minimal"):
            return service.minimal_invariants(args.m)
        if key == ("invariants", "hetero"):
            return service.hetero_invariants(args.left, args.right)
        if key == ("classify", "su2"):
            return service.classify_su2(args.k)
        if key == ("classify", "vir"):
            return service.classify_vir(args.m, args.full_cft, args.boundary)
        if key == ("classify", "boundary"):
            return service.boundary(args.m)
        if key == ("moonshine", "j"):
            return service.j(args.nmax)
        if key == ("moonshine", "J"):
            return service.J(args.nmax)
        if key == ("moonshine", "mckay"):
            return service.mckay(args.terms)
        if key == ("moonshine", "order"):
            return service.monster_order()
        if key == ("index", "jones"):
            if args.test is not None:
                return service.jones_test(args.test)
            return service.jones(args.n)
        return self._dispatch_golden(args)

    def _dispatch_golden(self, args: argparse.Namespace) -> Report:
        golden = self._golden(args)
        directory = str(args.dir or self._computations.config.golden_dir)
        if args.command == "verify":
            return golden_report(golden.verify(), directory)
        if args.command == "record":
            command = [a for a in args.argv if a != "--"]
            if not command:
                raise ValueError("golden record needs a command to record")
            paths = (golden.record(command),)
        else:
            paths = golden.record_defaults()
        payload = {"directory": directory, "recorded": [p.name for p in paths]}
        rows = tuple((p.name,) for p in paths)
        return Report("golden-record", payload, ("record",), rows)
