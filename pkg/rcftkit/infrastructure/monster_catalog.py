"""Monster dimensions shipped as package data.

These numbers are external input, not derived here: the McKay check
decomposes computed J coefficients into them.
"""

from __future__ import annotations

import json
from functools import cached_property
from importlib import resources
from typing import Any

DATA_PACKAGE = "rcftkit.data"
DATA_FILE = "monster_irreps.json"


class MonsterDataError(ValueError):
    """The packaged Monster data is missing or malformed."""


class PackagedMonsterCatalog:
    """Reads ``monster_irreps.json`` from the installed package once."""

    def __init__(self, package: str = DATA_PACKAGE, filename: str = DATA_FILE) -> None:
        self._package = package
        self._filename = filename

    @cached_property
    def _document(self) -> dict[str, Any]:
        try:
            text = resources.files(self._package).joinpath(self._filename).read_text(
                encoding="utf-8"
            )
            data = json.loads(text)
        except (OSError, ModuleNotFoundError, json.JSONDecodeError) as exc:
            raise MonsterDataError(f"cannot load {self._filename}: {exc}") from exc
        if not isinstance(data, dict):
            raise MonsterDataError(f"{self._filename} does not hold a JSON object")
        return data

    def _integers(self, key: str) -> tuple[int, ...]:
        values = self._document.get(key)
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise MonsterDataError(f"{self._filename}: {key} must be a list of ints")
        return tuple(values)

    def irrep_dimensions(self) -> tuple[int, ...]:
        return self._integers("irreps")

    def module_dimensions(self) -> tuple[int, ...]:
        return self._integers("moonshine_module_dims")
