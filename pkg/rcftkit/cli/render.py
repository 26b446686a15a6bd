"""Writes a Report as canonical JSON, CSV or an aligned text table."""

from __future__ import annotations

import csv
from typing import Any, TextIO

from rcftkit.application.reports import Report, canonical_json


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def render_json(report: Report, stream: TextIO) -> None:
    stream.write(canonical_json(report.payload) + "\n")


def render_csv(report: Report, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(v) for v in row])


def render_table(report: Report, stream: TextIO) -> None:
    cells = [[_cell(v) for v in row] for row in report.rows]
    widths = [
        max([len(header), *(len(row[i]) for row in cells)])
        for i, header in enumerate(report.columns)
    ]
    if widths:
        header = "  ".join(h.ljust(w) for h, w in zip(report.columns, widths))
        stream.write(header.rstrip())
        stream.write("\n" + "  ".join("-" * w for w in widths) + "\n")
        for row in cells:
            line = "  ".join(c.ljust(w) for c, w in zip(row, widths))
            stream.write(line.rstrip() + "\n")
    stream.write(f"{report.kind}: {'passed' if report.passed else 'FAILED'}\n")


RENDERERS = {"json": render_json, "csv": render_csv, "table": render_table}


def render(report: Report, fmt: str, stream: TextIO) -> None:
    RENDERERS[fmt](report, stream)
