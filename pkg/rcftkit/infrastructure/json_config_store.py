"""JSON-file implementation of the ConfigStore port."""

from __future__ import annotations

import json
import logging
import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from platformdirs import user_config_dir

APP_NAME = "rcftkit"
CONFIG_FILE_NAME = "config.json"
CONFIG_ENV_VAR = "MTC_CONFIG"

logger = logging.getLogger(__name__)


def default_config_path(environ: Mapping[str, str] | None = None) -> Path:
    """``MTC_CONFIG`` when set, else the per-user configuration file."""
    env = os.environ if environ is None else environ
    override = env.get(CONFIG_ENV_VAR)
    if override:
        return Path(override)
    return Path(user_config_dir(APP_NAME)) / CONFIG_FILE_NAME


class JsonConfigStore:
    """Reads settings from a JSON document; a missing file means defaults."""

    def __init__(self, path: Path | None = None) -> None:
        self._path = path if path else default_config_path()

    def location(self) -> Path:
        return self._path

    def load(self) -> dict[str, Any]:
        if not self._path.exists():
            return {}
        try:
            with self._path.open("r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, ValueError) as exc:
            # Defaults apply; the warning names the file to repair.
            logger.warning("Could not read config %s: %s", self._path, exc)
            return {}
        if not isinstance(data, dict):
            logger.warning("Config %s is not a JSON object; ignoring it", self._path)
            return {}
        return data
