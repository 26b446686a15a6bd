"""Golden records: recorded commands whose canonical output must not drift."""

from __future__ import annotations

import hashlib
import logging
import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from rcftkit.application.ports import GoldenRecord, GoldenStore

logger = logging.getLogger(__name__)

# Runs a command and returns its exit code with its canonical JSON output.
CommandRunner = Callable[[Sequence[str]], tuple[int, str]]

DEFAULT_COMMANDS: tuple[tuple[str, ...], ...] = (
    ("invariants", "su2", "--k", "10"),
    ("invariants", "su2", "--k", "28"),
    ("classify", "vir", "--m", "11"),
    ("classify", "vir", "--m", "12"),
    ("moonshine", "j", "--nmax", "50"),
    *(("classify", "boundary", "--m", str(m)) for m in range(3, 13)),
)

_UNSAFE = re.compile(r"[^A-Za-z0-9]+")


class GoldenError(ValueError):
    """A command could not be recorded."""


def digest(output: str) -> str:
    return hashlib.sha256(output.encode("utf-8")).hexdigest()


def record_name(command: Sequence[str]) -> str:
    """``("invariants", "su2", "--k", "10")`` -> ``"invariants-su2-k-10"``."""
    return _UNSAFE.sub("-", " ".join(command)).strip("-")


@dataclass(frozen=True)
class GoldenMismatch:
    name: str
    reason: str


@dataclass(frozen=True)
class GoldenReport:
    checked: int
    mismatches: tuple[GoldenMismatch, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.mismatches


class GoldenService:
    """Records commands and replays them against their stored hashes."""

    def __init__(self, store: GoldenStore, runner: CommandRunner) -> None:
        self._store = store
        self._runner = runner

    def record(self, command: Sequence[str]) -> Path:
        code, output = self._runner(command)
        if code != 0:
            raise GoldenError(f"{' '.join(command)} exited with {code}; not recorded")
        name = record_name(command)
        record = GoldenRecord(name, tuple(command), output, digest(output))
        path = self._store.save(record)
        logger.info("recorded %s", path)
        return path

    def record_defaults(self) -> tuple[Path, ...]:
        return tuple(self.record(command) for command in DEFAULT_COMMANDS)

    def verify(self) -> GoldenReport:
        """Check each stored output against its hash, then replay the command."""
        records = self._store.records()
        if not records:
            logger.warning("no golden records found; nothing to verify")
            return GoldenReport(0)
        mismatches = []
        for record in records:
            reason = self._mismatch(record)
            if reason:
                logger.warning("golden %s: %s", record.name, reason)
                mismatches.append(GoldenMismatch(record.name, reason))
        return GoldenReport(len(records), tuple(mismatches))

    def _mismatch(self, record: GoldenRecord) -> str | None:
        if digest(record.output) != record.digest:
            return "stored output does not match its recorded hash"
        code, output = self._runner(record.command)
        if code != 0:
            return f"replay exited with {code}"
        if digest(output) != record.digest:
            return "replayed output differs from the recording"
        return None
