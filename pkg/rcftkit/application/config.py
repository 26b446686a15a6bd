"""Typed access to the user configuration."""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from typing import Any

from rcftkit.application.ports import ConfigStore
from rcftkit.domain.invariant_search import SearchSettings

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "csv", "table")


class ConfigError(ValueError):
    """A configuration value is outside its allowed range."""


@dataclass(frozen=True)
class Config:
    tolerance_relation: float = 1e-9
    tolerance_rounding: float = 1e-6
    search_node_budget: int = 10**8
    nullspace_threshold: float = 1e-8
    output_format: str = "table"
    golden_dir: str = "golden"
    su2_level_ceiling: int = 32
    minimal_full_ceiling: int = 13
    classification_ceiling: int = 30
    mckay_bound: int = 10
    search_workers: int = 1

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            problem = _problem(field.name, getattr(self, field.name))
            if problem:
                raise ConfigError(f"{field.name}: {problem}")

    def search_settings(self) -> SearchSettings:
        return SearchSettings(
            node_budget=self.search_node_budget,
            rounding_tolerance=self.tolerance_rounding,
            relation_tolerance=self.tolerance_relation,
            nullspace_threshold=self.nullspace_threshold,
            workers=self.search_workers,
        )


_FLOATS = ("tolerance_relation", "tolerance_rounding", "nullspace_threshold")


def _problem(name: str, value: Any) -> str | None:
    """Return why ``value`` is not acceptable for ``name``, or ``None``."""
    if name == "output_format":
        return None if value in OUTPUT_FORMATS else f"not one of {OUTPUT_FORMATS}"
    if name == "golden_dir":
        return None if isinstance(value, str) and value else "not a directory name"
    if isinstance(value, bool):
        return "not a number"
    if name in _FLOATS:
        if not isinstance(value, (int, float)):
            return "not a number"
    elif not isinstance(value, int):
        return "not an integer"
    return None if value > 0 else "must be positive"


class ConfigService:
    """Builds a Config from a store, keeping the default for any bad key."""

    def __init__(self, store: ConfigStore) -> None:
        self._store = store

    def load(self) -> Config:
        raw = self._store.load()
        values: dict[str, Any] = {}
        for field in dataclasses.fields(Config):
            if field.name not in raw:
                continue
            value = raw[field.name]
            problem = _problem(field.name, value)
            if problem:
                logger.warning(
                    "%s in %s: %s; using the default",
                    field.name,
                    self._store.location(),
                    problem,
                )
                continue
            values[field.name] = float(value) if field.name in _FLOATS else value
        unknown = sorted(set(raw) - {f.name for f in dataclasses.fields(Config)})
        if unknown:
            logger.warning("ignoring unknown config keys %s", unknown)
        return Config(**values)
