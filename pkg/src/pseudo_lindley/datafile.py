import io
import math
from pathlib import Path
from typing import IO

import numpy as np
import pandas as pd

from ._types import DataFile
from .exceptions import DataFileError

HEADER = "x"


def _decode_lines(path_str: str, raw: bytes) -> list[str]:
    lines = []
    for i, chunk in enumerate(raw.splitlines(), start=1):
        try:
            lines.append(chunk.decode("utf-8-sig" if i == 1 else "utf-8"))
        except UnicodeDecodeError as e:
            raise DataFileError(path_str, i, f"not valid UTF-8 (byte {e.object[e.start]:#04x})") from None
    return lines


def _to_float(cell: str) -> float:
    # float() is correctly rounded, so %.17g text reads back bit for bit
    try:
        return float(cell)
    except ValueError:
        return math.nan


def read_data(path: str | Path) -> DataFile:
    """
    Read one nonnegative number per line.

    An optional first line "x" is a header; blank lines are ignored. Any
    other non-numeric, non-finite or negative entry, or a line that is not
    UTF-8, raises DataFileError naming its 1-based line number.
    """
    path_str = str(path)
    text_lines = _decode_lines(path_str, Path(path).read_bytes())
    cells = pd.Series(text_lines, dtype=str).str.strip()
    lines = pd.Series(np.arange(1, len(cells) + 1), index=cells.index)
    if len(cells) and cells.iloc[0] == HEADER:
        cells, lines = cells.iloc[1:], lines.iloc[1:]
    keep = cells != ""
    cells, lines = cells[keep], lines[keep]

    values = cells.map(_to_float).astype(float)
    bad = values.isna()
    if bad.any():
        idx = bad.idxmax()
        raise DataFileError(path_str, int(lines[idx]), f"not a number: {cells[idx]!r}")
    arr = values.to_numpy(dtype=float)
    nonfinite = ~np.isfinite(arr)
    if nonfinite.any():
        i = int(np.argmax(nonfinite))
        raise DataFileError(path_str, int(lines.iloc[i]), f"non-finite value {cells.iloc[i]!r}")
    negative = arr < 0
    if negative.any():
        i = int(np.argmax(negative))
        raise DataFileError(path_str, int(lines.iloc[i]), f"negative value {arr[i]!r}")
    return DataFile(path=path_str, values=arr)


def format_data(values: np.ndarray) -> str:
    """Header "x" then one value per line, 17 significant digits (exact round trip)."""
    buf = io.StringIO()
    pd.DataFrame({HEADER: np.asarray(values, dtype=float)}).to_csv(
        buf, index=False, float_format="%.17g", lineterminator="\n"
    )
    return buf.getvalue()


def write_data(target: str | Path | IO[str], values: np.ndarray) -> None:
    text = format_data(values)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)
