"""Header resolution, column type inference, and table serialization.

The type ladder is boolean, number, date, string: the first type that
parses every non-empty cell in a column wins, otherwise the column is a
string column.  Empty cells are missing values: empty CSV fields, JSON
nulls.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from datetime import date

from .model import RawTable

BOOLEAN = "boolean"
NUMBER = "number"
DATE = "date"
STRING = "string"

_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")
_INT_RE = re.compile(r"^[+-]?\d+$")


@dataclass
class TypedTable:
    """A finished table: named, typed, ready to serialize."""

    names: list[str]
    types: list[str]
    rows: list[list]
    page: int
    method: str


def apply_header(raw: RawTable, col_names: bool = True) -> tuple[list[str], list[list[str]]]:
    """First row as names when col_names, else generated X1..Xn."""
    if not raw.rows:
        return [], []
    n = raw.n_cols
    if col_names:
        header = raw.rows[0]
        names = [h if h else f"X{i + 1}" for i, h in enumerate(header)]
        return names, [list(r) for r in raw.rows[1:]]
    return [f"X{i + 1}" for i in range(n)], [list(r) for r in raw.rows]


def _is_boolean(s: str) -> bool:
    return s.upper() in ("TRUE", "FALSE")


def _is_number(s: str) -> bool:
    return bool(_NUMBER_RE.match(s))


def _is_date(s: str) -> bool:
    if not _DATE_RE.match(s):
        return False
    try:
        date.fromisoformat(s)
        return True
    except ValueError:
        return False


def infer_column_types(names: list[str], rows: list[list[str]]) -> list[str]:
    types = []
    for col in range(len(names)):
        cells = [row[col] for row in rows if row[col] != ""]
        if not cells:
            types.append(STRING)
        elif all(_is_boolean(c) for c in cells):
            types.append(BOOLEAN)
        elif all(_is_number(c) for c in cells):
            types.append(NUMBER)
        elif all(_is_date(c) for c in cells):
            types.append(DATE)
        else:
            types.append(STRING)
    return types


def _convert(cell: str, col_type: str):
    if cell == "":
        return None
    if col_type == BOOLEAN:
        return cell.upper() == "TRUE"
    if col_type == NUMBER:
        if _INT_RE.match(cell):
            return int(cell)
        return float(cell)
    return cell


def build_typed(raw: RawTable, col_names: bool = True) -> TypedTable:
    names, data = apply_header(raw, col_names)
    types = infer_column_types(names, data)
    rows = [[_convert(cell, t) for cell, t in zip(row, types)] for row in data]
    return TypedTable(names=names, types=types, rows=rows, page=raw.page, method=raw.method)


def _text_form(value) -> str:
    """The string a typed value takes in delimited output."""
    if value is None:
        return ""
    if value is True:
        return "TRUE"
    if value is False:
        return "FALSE"
    if isinstance(value, float):
        if value == int(value) and abs(value) < 1e15:
            return str(int(value))
        return repr(value)
    return str(value)


def _json_record(table: TypedTable, row: list) -> dict:
    return {name: value for name, value in zip(table.names, row)}


def _delimited_field(value: str, delimiter: str) -> str:
    # stdlib csv with a bare-LF terminator leaves lone CR fields unquoted,
    # which breaks round-tripping of multiline lattice cells
    if any(ch in value for ch in (delimiter, '"', "\r", "\n")):
        return '"' + value.replace('"', '""') + '"'
    return value


def write_table(table: TypedTable, fmt: str = "csv") -> bytes:
    """Serialize to csv, tsv (RFC-4180-style quoting), or json records."""
    if fmt in ("csv", "tsv"):
        delimiter = "," if fmt == "csv" else "\t"
        lines = [delimiter.join(_delimited_field(n, delimiter) for n in table.names)]
        for row in table.rows:
            lines.append(
                delimiter.join(_delimited_field(_text_form(v), delimiter) for v in row)
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        records = [_json_record(table, row) for row in table.rows]
        return json.dumps(records, ensure_ascii=False).encode("utf-8")
    raise ValueError(f"unknown output format {fmt!r}")
