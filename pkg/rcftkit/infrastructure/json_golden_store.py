"""Golden records as one JSON document per recorded command."""

from __future__ import annotations

import json
from pathlib import Path

from rcftkit.application.ports import GoldenRecord

RECORD_SUFFIX = ".json"


class GoldenFileError(ValueError):
    """A golden file is unreadable or lacks a field."""


class JsonGoldenStore:
    """Reads and writes ``<name>.json`` files under one directory."""

    def __init__(self, directory: Path) -> None:
        self._directory = directory

    @property
    def directory(self) -> Path:
        return self._directory

    def records(self) -> tuple[GoldenRecord, ...]:
        if not self._directory.is_dir():
            return ()
        return tuple(
            self._read(path)
            for path in sorted(self._directory.glob(f"*{RECORD_SUFFIX}"))
        )

    def _read(self, path: Path) -> GoldenRecord:
        try:
            with path.open("r", encoding="utf-8") as fh:
                data = json.load(fh)
            return GoldenRecord(
                name=path.stem,
                command=tuple(str(arg) for arg in data["command"]),
                output=str(data["output"]),
                digest=str(data["digest"]),
            )
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise GoldenFileError(f"{path.name}: {exc}") from exc

    def save(self, record: GoldenRecord) -> Path:
        self._directory.mkdir(parents=True, exist_ok=True)
        path = self._directory / f"{record.name}{RECORD_SUFFIX}"
        tmp = path.with_suffix(".tmp")
        document = {
            "command": list(record.command),
            "digest": record.digest,
            "output": record.output,
        }
        with tmp.open("w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2, sort_keys=True)
            fh.write("\n")
        tmp.replace(path)
        return path
