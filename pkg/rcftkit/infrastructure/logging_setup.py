"""Root logger configuration for command-line runs."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import TextIO

from platformdirs import user_log_dir

APP_NAME = "rcftkit"
LOG_FILE_NAME = "rcftkit.log"
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def default_log_path() -> Path:
    return Path(user_log_dir(APP_NAME)) / LOG_FILE_NAME


def setup_logging(
    verbose: bool = False,
    log_file: Path | None = None,
    stream: TextIO | None = None,
) -> list[logging.Handler]:
    """Send records to stderr and, when asked, to ``log_file`` as well."""
    handlers: list[logging.Handler] = [
        logging.StreamHandler(stream if stream is not None else sys.stderr)
    ]
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    return handlers
