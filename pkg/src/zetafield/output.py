"""Serialization of command results to CSV and JSON.

Every numeric result travels with an error-budget entry: a non-negative
float, or the string "exact" for closed forms whose only error is the
floating-point arithmetic itself.  Floats are printed with %.17g so a
parse-and-reemit cycle is byte-identical; NaN appears as "nan" in CSV and
as the (non-strict) NaN literal in JSON.  Timestamps are carried verbatim
and excluded from any determinism comparison.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from .errors import OutOfDomain
from .figures import FigureData, FigureSeries

SCHEMA_VERSION = "1"

Scalar = float | int | str

_CSV_HEADER = ("section", "key", "value")
_FIGURE_HEADER = ("x", "series", "y")


def format_float(value: float) -> str:
    return "%.17g" % value


def _format_cell(value: Scalar) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def timestamp_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class OutputRecord:
    """One command's inputs and results in emission order."""

    command: str
    inputs: dict[str, Scalar]
    results: dict[str, Scalar]
    error_budget: dict[str, Scalar]
    schema_version: str = SCHEMA_VERSION
    timestamp: str = field(default_factory=timestamp_now)

    def validate(self) -> None:
        """Checks the budget: one entry per result, "exact" or float >= 0."""
        missing = set(self.results) - set(self.error_budget)
        if missing:
            raise OutOfDomain(f"results lacking an error budget: {sorted(missing)}")
        for key, entry in self.error_budget.items():
            if entry == "exact":
                continue
            if isinstance(entry, (int, float)) and not isinstance(entry, bool):
                value = float(entry)
                if math.isnan(value) or value >= 0.0:
                    continue
            raise OutOfDomain(f"error budget for {key!r} must be 'exact' or a float >= 0")


def record_to_json(record: OutputRecord) -> str:
    record.validate()
    payload = {
        "schema_version": record.schema_version,
        "command": record.command,
        "inputs": record.inputs,
        "results": record.results,
        "error_budget": record.error_budget,
        "timestamp": record.timestamp,
    }
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def record_from_json(text: str) -> OutputRecord:
    payload = json.loads(text)
    return OutputRecord(
        command=payload["command"],
        inputs=payload["inputs"],
        results=payload["results"],
        error_budget=payload["error_budget"],
        schema_version=payload["schema_version"],
        timestamp=payload["timestamp"],
    )


def record_to_csv(record: OutputRecord) -> str:
    record.validate()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    writer.writerow(("meta", "schema_version", record.schema_version))
    writer.writerow(("meta", "command", record.command))
    writer.writerow(("meta", "timestamp", record.timestamp))
    for key, value in record.inputs.items():
        writer.writerow(("input", key, _format_cell(value)))
    for key, value in record.results.items():
        writer.writerow(("result", key, _format_cell(value)))
    for key, value in record.error_budget.items():
        writer.writerow(("error", key, _format_cell(value)))
    return buf.getvalue()


def _parse_scalar(text: str) -> Scalar:
    try:
        return float(text)
    except ValueError:
        return text


def record_from_csv(text: str) -> OutputRecord:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or tuple(rows[0]) != _CSV_HEADER:
        raise OutOfDomain(f"record CSV must start with header {','.join(_CSV_HEADER)}")
    meta: dict[str, str] = {}
    inputs: dict[str, Scalar] = {}
    results: dict[str, Scalar] = {}
    budget: dict[str, Scalar] = {}
    for section, key, value in rows[1:]:
        if section == "meta":
            meta[key] = value
        elif section == "input":
            inputs[key] = _parse_scalar(value)
        elif section == "result":
            results[key] = _parse_scalar(value)
        elif section == "error":
            budget[key] = _parse_scalar(value)
        else:
            raise OutOfDomain(f"unknown record CSV section {section!r}")
    for name in ("schema_version", "command", "timestamp"):
        if name not in meta:
            raise OutOfDomain(f"record CSV is missing meta row {name!r}")
    return OutputRecord(
        command=meta["command"],
        inputs=inputs,
        results=results,
        error_budget=budget,
        schema_version=meta["schema_version"],
        timestamp=meta["timestamp"],
    )


def figure_to_csv(figure: FigureData) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_FIGURE_HEADER)
    for x, label, y in figure.rows():
        writer.writerow((format_float(x), label, format_float(y)))
    return buf.getvalue()


def figure_from_csv(text: str, figure_id: int = 0) -> FigureData:
    """Rebuilds FigureData from an emitted file; series stay in file order."""
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or tuple(rows[0]) != _FIGURE_HEADER:
        raise OutOfDomain(f"figure CSV must start with header {','.join(_FIGURE_HEADER)}")
    order: list[str] = []
    grouped: dict[str, tuple[list[float], list[float]]] = {}
    for x, label, y in rows[1:]:
        if label not in grouped:
            order.append(label)
            grouped[label] = ([], [])
        grouped[label][0].append(float(x))
        grouped[label][1].append(float(y))
    series = tuple(
        FigureSeries(label=label, x=np.array(grouped[label][0]), y=np.array(grouped[label][1]))
        for label in order
    )
    return FigureData(figure_id=figure_id, series=series)


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
