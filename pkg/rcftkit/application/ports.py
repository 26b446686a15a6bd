"""Interfaces (ports) implemented by the infrastructure layer."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Protocol


class ConfigStore(Protocol):
    """Reads the user's configuration document."""

    def load(self) -> dict[str, Any]:
        """Return the raw settings; an unreadable document gives ``{}``."""
        ...

    def location(self) -> Path:
        """Return where the document is read from."""
        ...


class ModelFileStore(Protocol):
    """Reads ring and modular-data documents supplied by the user."""

    def read(self, path: Path) -> dict[str, Any]:
        """Return the parsed document; raises ``ModelFileError`` when unusable."""
        ...


class MonsterCatalog(Protocol):
    """External Monster group data used by the McKay check."""

    def irrep_dimensions(self) -> tuple[int, ...]:
        """Return the smallest irreducible dimensions, ascending from 1."""
        ...

    def module_dimensions(self) -> tuple[int, ...]:
        """Return graded dimensions of the moonshine module from ``q^-1``."""
        ...


@dataclass(frozen=True)
class GoldenRecord:
    """A recorded command with its canonical JSON output and that output's hash."""

    name: str
    command: tuple[str, ...]
    output: str
    digest: str


class GoldenStore(Protocol):
    """Persists golden records."""

    def records(self) -> tuple[GoldenRecord, ...]:
        """Return every record, sorted by name; raises on a malformed file."""
        ...

    def save(self, record: GoldenRecord) -> Path:
        """Write ``record`` and return its path."""
        ...
