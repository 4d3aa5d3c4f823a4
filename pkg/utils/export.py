"""CSV/XLSX/YAML writers for solver artefacts.

Path: utils/export.py

Every table written by the CLI goes through ``write_csv`` / ``write_xlsx``.
Complex numbers are never written as a single cell: callers split them with
``split_complex`` into ``<name>_re`` / ``<name>_im`` columns. Floats are
rendered with 17 significant digits, so two runs over the same input produce
byte-identical files.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np
import yaml


def format_cell(value: Any) -> str:
    """Render a cell value with round-trippable float precision."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def split_complex(name: str, value: complex) -> dict[str, float]:
    """``("y", 1+2j)`` -> ``{"y_re": 1.0, "y_im": 2.0}``."""
    return {f"{name}_re": float(np.real(value)), f"{name}_im": float(np.imag(value))}


def _row_values(row: Any, headers: Sequence[str]) -> list[str]:
    """Extract formatted values from a row (dict or list/tuple) in header order."""
    if isinstance(row, Mapping):
        return [format_cell(row.get(h)) for h in headers]
    return [format_cell(v) for v in row]


def write_csv(path: Path, headers: Sequence[str], rows: Iterable[Any]) -> Path:
    """Write ``rows`` as a CSV file.

    ``rows`` may be an iterable of dicts (looked up by ``headers``) or an
    iterable of lists/tuples (written positionally).
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(list(headers))
        for row in rows:
            writer.writerow(_row_values(row, headers))
    return path


def write_xlsx(path: Path, headers: Sequence[str], rows: Iterable[Any]) -> Path:
    """Write ``rows`` as an XLSX workbook with a single sheet (numbers kept numeric)."""
    from openpyxl import Workbook

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    wb = Workbook()
    ws = wb.active
    ws.append(list(headers))
    for row in rows:
        values = [row.get(h) for h in headers] if isinstance(row, Mapping) else list(row)
        ws.append([_xlsx_value(v) for v in values])
    wb.save(path)
    return path


def _xlsx_value(value: Any) -> Any:
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


def write_table(path: Path, headers: Sequence[str], rows: Iterable[Any], fmt: str = "csv") -> Path:
    """Dispatch to ``write_csv`` / ``write_xlsx``; the suffix of ``path`` is replaced by ``fmt``."""
    path = Path(path).with_suffix(f".{fmt}")
    if fmt == "xlsx":
        return write_xlsx(path, headers, rows)
    return write_csv(path, headers, rows)


def to_plain(value: Any) -> Any:
    """Recursively convert numpy scalars, complex numbers and tuples into YAML-safe values."""
    if isinstance(value, Mapping):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (complex, np.complexfloating)):
        return [float(np.real(value)), float(np.imag(value))]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, Path):
        return str(value)
    return value


def write_yaml(path: Path, payload: Mapping[str, Any]) -> Path:
    """Write a report/manifest mapping as YAML, keys in insertion order."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        yaml.safe_dump(to_plain(payload), fh, sort_keys=False, allow_unicode=True)
    return path


def read_yaml(path: Path) -> Any:
    with Path(path).open("r", encoding="utf-8") as fh:
        return yaml.safe_load(fh)
