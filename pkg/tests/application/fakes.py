"""Hand-written test doubles for the application services.

No mocking library is used anywhere in this project, so every port the
services depend on has a small fake here: the config store, the model-file
reader, the Monster catalog, the golden store and a command runner.
``make_service`` wires the first three into a ComputationService.

Imported by the test modules and not named ``test_*``, so pytest does not
collect it.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from rcftkit.application.codec import ModelFileError
from rcftkit.application.computations import ComputationService
from rcftkit.application.config import Config
from rcftkit.application.ports import GoldenRecord

MONSTER_IRREPS = (1, 196883, 21296876, 842609326)
MODULE_DIMS = (1, 0, 196884, 21493760, 864299970)


def broken_ring_document() -> dict[str, Any]:
    """Three sectors whose product is not associative."""
    N = np.zeros((3, 3, 3), dtype=np.int64)
    for a in range(3):
        N[0, a, a] = N[a, 0, a] = 1
    N[1, 1, 0] = N[1, 1, 1] = 1
    N[2, 2, 0] = 1
    N[1, 2, 2] = N[2, 1, 2] = 1
    return {"n": 3, "conj": [0, 1, 2], "N": N.tolist()}


class FakeConfigStore:
    def __init__(self, data: dict[str, Any] | None = None) -> None:
        self.data = dict(data or {})

    def load(self) -> dict[str, Any]:
        return dict(self.data)

    def location(self) -> Path:
        return Path("/fake/config.json")


class FakeModelFiles:
    """Serves documents from a dict keyed by path; unknown paths fail."""

    def __init__(self, documents: dict[Path, dict[str, Any]] | None = None) -> None:
        self.documents = dict(documents or {})
        self.reads: list[Path] = []

    def read(self, path: Path) -> dict[str, Any]:
        self.reads.append(path)
        if path not in self.documents:
            raise ModelFileError(f"cannot read {path}")
        return self.documents[path]


class FakeMonsterCatalog:
    def __init__(
        self,
        irreps: tuple[int, ...] = MONSTER_IRREPS,
        module: tuple[int, ...] = MODULE_DIMS,
    ) -> None:
        self.irreps = irreps
        self.module = module

    def irrep_dimensions(self) -> tuple[int, ...]:
        return self.irreps

    def module_dimensions(self) -> tuple[int, ...]:
        return self.module


class FakeGoldenStore:
    def __init__(self, records: Sequence[GoldenRecord] = ()) -> None:
        self.saved: dict[str, GoldenRecord] = {r.name: r for r in records}

    def records(self) -> tuple[GoldenRecord, ...]:
        return tuple(self.saved[name] for name in sorted(self.saved))

    def save(self, record: GoldenRecord) -> Path:
        self.saved[record.name] = record
        return Path("/fake/golden") / f"{record.name}.json"


class FakeRunner:
    """Answers each command from a table; unknown commands exit with 2."""

    def __init__(self, outputs: dict[tuple[str, ...], str] | None = None) -> None:
        self.outputs = dict(outputs or {})
        self.calls: list[tuple[str, ...]] = []

    def __call__(self, command: Sequence[str]) -> tuple[int, str]:
        key = tuple(command)
        self.calls.append(key)
        if key not in self.outputs:
            return 2, ""
        return 0, self.outputs[key]


def make_service(
    config: Config | None = None,
    documents: dict[Path, dict[str, Any]] | None = None,
    monster: FakeMonsterCatalog | None = None,
) -> ComputationService:
    return ComputationService(
        config or Config(),
        FakeModelFiles(documents),
        monster or FakeMonsterCatalog(),
    )
