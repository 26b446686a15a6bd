"""JSON documents supplied on the command line: strict, never tolerant."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from rcftkit.application.codec import ModelFileError


class JsonModelFiles:
    """Reads ring and modular-data documents, raising ModelFileError on any fault."""

    def read(self, path: Path) -> dict[str, Any]:
        try:
            with path.open("r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ModelFileError(f"cannot read {path}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise ModelFileError(f"{path} is not valid JSON: {exc.msg}") from exc
        if not isinstance(data, dict):
            raise ModelFileError(f"{path} does not hold a JSON object")
        return data
