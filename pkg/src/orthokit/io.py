"""Sign-matrix text files and JSON report serialization.

File format: an optional header line ``rows cols`` followed by one line per
row written with the characters ``+``, ``-`` and ``0``.  Characters may be
separated by single spaces.  Blank lines are ignored.
"""

from __future__ import annotations

import json
import re

import numpy as np

from .errors import OrthoError
from .matrix import SignMatrix, sign_matrix

_HEADER = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")
_CHARS = {"+": 1, "-": -1, "0": 0}
_SYMBOLS = {1: "+", -1: "-", 0: "0"}


class SignMatrixParseError(OrthoError):
    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {message}")


def _parse_row(text: str, lineno: int) -> list[int]:
    row = []
    expect_symbol = True
    for col, ch in enumerate(text, start=1):
        if expect_symbol:
            if ch not in _CHARS:
                raise SignMatrixParseError(f"unexpected character {ch!r}", lineno, col)
            row.append(_CHARS[ch])
            expect_symbol = False
        elif ch == " ":
            expect_symbol = True
        elif ch in _CHARS:
            row.append(_CHARS[ch])
        else:
            raise SignMatrixParseError(f"unexpected character {ch!r}", lineno, col)
    if expect_symbol and row:
        raise SignMatrixParseError("trailing or double space", lineno, len(text))
    return row


def parse_sign_matrix(text: str) -> SignMatrix:
    lines = [(i, ln.rstrip("\r\n").rstrip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln.strip()]
    if not lines:
        raise SignMatrixParseError("no matrix rows found", 1)

    header = None
    m = _HEADER.match(lines[0][1])
    if m and int(m.group(1)) > 0 and int(m.group(2)) > 0:  # "0 0" is a row, not a header
        header = (int(m.group(1)), int(m.group(2)))
        header_line = lines[0][0]
        lines = lines[1:]
        if not lines:
            raise SignMatrixParseError("header without rows", header_line)

    rows = []
    width = None
    for lineno, ln in lines:
        row = _parse_row(ln, lineno)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise SignMatrixParseError(f"row has {len(row)} entries, expected {width}", lineno)
        rows.append(row)

    if header is not None and header != (len(rows), width):
        raise SignMatrixParseError(
            f"header says {header[0]}x{header[1]} but body is {len(rows)}x{width}", header_line
        )
    return sign_matrix(np.array(rows, dtype=np.int64))


def format_sign_matrix(m, header: bool = False) -> str:
    m = sign_matrix(m)
    lines = [f"{m.shape[0]} {m.shape[1]}"] if header else []
    lines += ["".join(_SYMBOLS[int(x)] for x in row) for row in m]
    return "\n".join(lines) + "\n"


def read_sign_matrix(path) -> SignMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_sign_matrix(fh.read())


def write_sign_matrix(m, path, header: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_sign_matrix(m, header=header))


def _int_keys(obj: dict):
    # histograms are keyed by signed integers; JSON stores them as strings
    if obj and all(re.fullmatch(r"-?\d+", k) for k in obj):
        return {int(k): v for k, v in obj.items()}
    return obj


def dump_report(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_report(text: str) -> dict:
    return json.loads(text, object_hook=_int_keys)
