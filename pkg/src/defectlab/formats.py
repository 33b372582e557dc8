"""Reading and writing configurations as text, JSON or CSV.

Columns are points. The text format is a header line ``e n`` followed by
``e`` lines of ``n`` entries; entries are integers or fractions ``p/q``.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .config import PointConfiguration
from .errors import ParseError
from .exactlin import ExactMatrix

FORMATS = ("text", "json", "csv")


def _entry(tok, line: int | None, col: int | None) -> Fraction:
    if isinstance(tok, bool):
        raise ParseError(f"not a number: {tok!r}", line, col)
    if isinstance(tok, int):
        return Fraction(tok)
    if isinstance(tok, str):
        t = tok.strip()
        try:
            num, _, den = t.partition("/")
            if den:
                return Fraction(int(num), int(den))
            return Fraction(int(t))
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"not an integer or p/q rational: {tok!r}", line, col)


def _build(rows: list[list[Fraction]], rows_are_points: bool) -> PointConfiguration:
    M = ExactMatrix(rows)
    if rows_are_points:
        M = M.T
    if M.ncols == 0:
        raise ParseError("empty configuration")
    return PointConfiguration(M)


def parse_text(src: str, rows_are_points: bool = False) -> PointConfiguration:
    lines = [(k + 1, ln) for k, ln in enumerate(src.splitlines()) if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input", 1)
    hno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'e n'", hno, 1)
    try:
        e, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must contain two integers", hno, 1) from None
    if e < 1 or n < 1:
        raise ParseError("e and n must be positive", hno, 1)
    body = lines[1:]
    if len(body) != e:
        raise ParseError(f"expected {e} rows, found {len(body)}", body[-1][0] if body else hno)
    rows = []
    for lno, ln in body:
        toks = ln.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", lno, 1)
        rows.append([_entry(t, lno, c + 1) for c, t in enumerate(toks)])
    return _build(rows, rows_are_points)


def parse_json(src: str, rows_are_points: bool = False) -> PointConfiguration:
    try:
        data = json.loads(src)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or not isinstance(data.get("rows"), list):
        raise ParseError('expected an object {"rows": [[...], ...]}', 1)
    raw = data["rows"]
    rows = []
    for i, r in enumerate(raw):
        if not isinstance(r, list):
            raise ParseError(f"row {i} is not a list", 1)
        if rows and len(r) != len(rows[0]):
            raise ParseError(f"row {i} has {len(r)} entries, expected {len(rows[0])}", 1)
        rows.append([_entry(x, None, None) for x in r])
    if not rows:
        raise ParseError("no rows", 1)
    return _build(rows, rows_are_points)


def parse_csv(src: str, rows_are_points: bool = False) -> PointConfiguration:
    rows = []
    for lno, rec in enumerate(csv.reader(io.StringIO(src)), start=1):
        if not rec or all(not x.strip() for x in rec):
            continue
        if rows and len(rec) != len(rows[0]):
            raise ParseError(f"expected {len(rows[0])} entries, found {len(rec)}", lno, 1)
        rows.append([_entry(x, lno, c + 1) for c, x in enumerate(rec)])
    if not rows:
        raise ParseError("empty input", 1)
    return _build(rows, rows_are_points)


def parse_input(src: str, fmt: str = "text", rows_are_points: bool = False) -> PointConfiguration:
    if fmt == "text":
        return parse_text(src, rows_are_points)
    if fmt == "json":
        return parse_json(src, rows_are_points)
    if fmt == "csv":
        return parse_csv(src, rows_are_points)
    raise ValueError(f"unknown format {fmt!r}")


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def emit(A: PointConfiguration, fmt: str = "text") -> str:
    rows = [[_fmt(x) for x in r] for r in A.matrix.rows]
    if fmt == "text":
        return "\n".join([f"{A.e} {A.n}"] + [" ".join(r) for r in rows]) + "\n"
    if fmt == "json":
        vals = [[int(x) if "/" not in x else x for x in r] for r in rows]
        return json.dumps({"rows": vals})
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")
