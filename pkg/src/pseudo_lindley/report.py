import dataclasses
import io
import json
import math
from typing import Any

import pandas as pd

from ._types import SimConfig, SimReport, SimRow, TableFormat
from .exceptions import DomainError

# CSV 列 → SimRow フィールド (順序固定)
CSV_COLUMNS: dict[str, str] = {
    "n": "n",
    "mve_theta": "mve_theta",
    "mve_beta": "mve_beta",
    "rmse_theta": "rmse_theta",
    "rmse_beta": "rmse_beta",
    "reject_theta": "reject_rate_theta",
    "reject_beta": "reject_rate_beta",
    "reject_joint": "reject_rate_joint",
    "degenerate": "degenerate_count",
}

SERIES = ("mve_theta", "mve_beta", "rmse_theta", "rmse_beta")

_FLOAT_FORMAT = "%.15g"


def _null_nan(obj: Any) -> Any:
    if isinstance(obj, float) and math.isnan(obj):
        return None
    if isinstance(obj, dict):
        return {key: _null_nan(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_null_nan(value) for value in obj]
    return obj


def dumps_json(payload: Any) -> str:
    """Strict JSON: undefined (NaN) values are written as null."""
    return json.dumps(_null_nan(payload), indent=2, allow_nan=False)


def _nan_null(row: dict[str, Any]) -> dict[str, Any]:
    return {key: math.nan if value is None else value for key, value in row.items()}


def _series(rep: SimReport) -> dict[str, list[list[float]]]:
    return {name: [[row.n, getattr(row, name)] for row in rep.rows] for name in SERIES}


def emit_table(rep: SimReport, format: TableFormat = "csv") -> str:
    """
    Render a report.

    csv     the nine table columns, one row per sample size
    json    config echo, full rows (with MC standard errors), wall time and
            the (n, value) series behind the two convergence plots
    series  long CSV `series,n,value` for external plotters
    """
    if format == "csv":
        frame = pd.DataFrame(
            [[getattr(row, field) for field in CSV_COLUMNS.values()] for row in rep.rows],
            columns=list(CSV_COLUMNS),
        )
        return frame.to_csv(index=False, float_format=_FLOAT_FORMAT, lineterminator="\n")
    if format == "json":
        payload = {
            "config": dataclasses.asdict(rep.config),
            "rows": [dataclasses.asdict(row) for row in rep.rows],
            "wall_time": rep.wall_time,
            "series": _series(rep),
        }
        return dumps_json(payload) + "\n"
    if format == "series":
        frame = pd.DataFrame(
            [(name, n, value) for name, points in _series(rep).items() for n, value in points],
            columns=["series", "n", "value"],
        )
        return frame.to_csv(index=False, float_format=_FLOAT_FORMAT, lineterminator="\n")
    raise DomainError(f"unknown table format {format!r}")


def parse_table(text: str, format: TableFormat = "csv") -> list[SimRow] | SimReport:
    """
    Inverse of emit_table for csv (→ list of rows) and json (→ SimReport).

    Rows parsed from csv carry NaN standard errors, which that format omits.
    """
    if format == "csv":
        frame = pd.read_csv(io.StringIO(text))
        if list(frame.columns) != list(CSV_COLUMNS):
            raise DomainError(f"unexpected CSV header {list(frame.columns)}")
        rows = []
        for rec in frame.to_dict(orient="records"):
            kwargs = {field: rec[column] for column, field in CSV_COLUMNS.items()}
            kwargs["n"] = int(kwargs["n"])
            kwargs["degenerate_count"] = int(kwargs["degenerate_count"])
            rows.append(SimRow(**kwargs))
        return rows
    if format == "json":
        payload = json.loads(text)
        return SimReport(
            config=SimConfig(**payload["config"]),
            rows=[SimRow(**_nan_null(row)) for row in payload["rows"]],
            wall_time=payload["wall_time"],
        )
    raise DomainError(f"cannot parse table format {format!r}")
