"""Command entrypoint and composition root.

This is the only module allowed to import the infrastructure layer: it
configures logging, builds every infrastructure implementation, injects it
into the application services and hands those to the command-line app.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from rcftkit.application.computations import ComputationService
from rcftkit.application.config import ConfigService
from rcftkit.cli.app import EXIT_OK, EXIT_USAGE, CliApp
from rcftkit.cli.parser import DEFAULT_LOG_FILE, parse_args
from rcftkit.infrastructure.json_config_store import JsonConfigStore
from rcftkit.infrastructure.json_golden_store import JsonGoldenStore
from rcftkit.infrastructure.json_model_files import JsonModelFiles
from rcftkit.infrastructure.logging_setup import default_log_path, setup_logging
from rcftkit.infrastructure.monster_catalog import PackagedMonsterCatalog


def _log_path(args: argparse.Namespace) -> Path | None:
    if args.log_file is None:
        return None
    if args.log_file == DEFAULT_LOG_FILE:
        return default_log_path()
    return Path(args.log_file)


def build_app(config_path: Path | None = None) -> CliApp:
    """Wire infrastructure into the services and build the command-line app."""
    config = ConfigService(JsonConfigStore(config_path)).load()
    computations = ComputationService(
        config, models=JsonModelFiles(), monster=PackagedMonsterCatalog()
    )
    return CliApp(computations, JsonGoldenStore, sys.stdout, sys.stderr)


def run(argv: Sequence[str]) -> int:
    try:
        args = parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    setup_logging(args.verbose, _log_path(args))
    return build_app(args.config).execute(args)


def main() -> int:
    """Run the ``rcftkit`` command on ``sys.argv``."""
    return run(sys.argv[1:])
