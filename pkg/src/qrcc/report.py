"""CSV/JSON experiment reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

CSV_COLUMNS = ["instance", "n", "m", "k", "alg", "q", "iters", "restarts", "seed",
               "bound", "integer_value", "certified", "time_s", "termination"]

_INT_COLS = {"n", "m", "k", "q", "iters", "restarts", "seed"}
_FLOAT_COLS = {"bound", "integer_value", "time_s"}


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows: Iterable[dict], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_fmt(row.get(col)) for col in CSV_COLUMNS])


def csv_text(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def read_csv(stream: TextIO) -> list[dict]:
    """Parse a report written by :func:`write_csv` back into typed rows."""
    reader = csv.DictReader(stream)
    if reader.fieldnames != CSV_COLUMNS:
        raise ValueError(f"unexpected report columns {reader.fieldnames}")
    rows = []
    for raw in reader:
        row = {}
        for col, val in raw.items():
            if val == "":
                row[col] = None
            elif col in _INT_COLS:
                row[col] = int(val)
            elif col in _FLOAT_COLS:
                row[col] = float(val)
            elif col == "certified":
                row[col] = val == "1"
            else:
                row[col] = val
        rows.append(row)
    return rows


def write_json(doc: dict, stream: TextIO) -> None:
    json.dump(doc, stream, indent=2, sort_keys=False)
    stream.write("\n")
