"""Deterministic CSV / JSON rendering of artifacts."""

import csv
import io
import json
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any


def format_float(value: float | None) -> str:
    """Shortest round-trip repr; None (undefined) renders as an empty field."""
    if value is None:
        return ""
    return repr(float(value))


def render_csv(header: Sequence[str], rows: Iterable[Sequence[float | None]]) -> str:
    """CSV text with `\\n` line endings and repr-formatted floats."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buffer.getvalue()


def parse_csv(text: str) -> tuple[list[str], list[list[float | None]]]:
    """Inverse of render_csv."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    rows = [[float(v) if v != "" else None for v in row] for row in reader]
    return header, rows


def render_json(payload: Any) -> str:
    """Sorted-key, indented JSON followed by a newline."""
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


def emit(text: str, path: str | Path | None = None) -> None:
    """Write an artifact to path, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).write_text(text, encoding="utf-8", newline="")
