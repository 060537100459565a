"""Reading and writing loop tables.

Text format (LOOPTAB v1): optional '#' comment lines, then the order n on
its own line, then n lines of n whitespace-separated integers in 0..n-1.
The writer always emits identity-normalized tables with single spaces and
a trailing newline, so output is byte-stable.  Files ending in .json use
a JSON object {"n": ..., "table": [[...]], "name": ...} instead.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import InvalidTableError, LoopTable


class LoopFileError(ValueError):
    """Malformed table file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int = 0):
        super().__init__("line %d: %s" % (line, message) if line else message)
        self.line = line


def loads(text: str, name: str = "") -> LoopTable:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _from_json_text(text, name)
    lines = text.splitlines()
    n = None
    rows = []
    header_line = 0
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            if line.startswith("# name:") and not name:
                name = line[7:].strip()
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise LoopFileError("expected the order, got %r" % line, i)
            if n < 1:
                raise LoopFileError("order must be positive", i)
            header_line = i
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise LoopFileError("non-integer entry in %r" % line, i)
        if len(row) != n:
            raise LoopFileError("expected %d entries, got %d" % (n, len(row)), i)
        if any(v < 0 or v >= n for v in row):
            raise LoopFileError("entry out of range 0..%d" % (n - 1), i)
        rows.append(row)
        if len(rows) == n:
            break
    if n is None:
        raise LoopFileError("empty table file")
    if len(rows) != n:
        raise LoopFileError("expected %d rows, found %d" % (n, len(rows)),
                            header_line)
    try:
        return LoopTable.from_rows(rows, name=name)
    except InvalidTableError as exc:
        raise LoopFileError(str(exc)) from exc


def _from_json_text(text: str, name: str) -> LoopTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoopFileError(exc.msg, exc.lineno) from exc
    for key in ("n", "table"):
        if key not in obj:
            raise LoopFileError("missing key %r" % key)
    rows = obj["table"]
    if len(rows) != obj["n"] or any(len(r) != obj["n"] for r in rows):
        raise LoopFileError("table shape does not match n")
    try:
        return LoopTable.from_rows(rows, name=name or obj.get("name", ""))
    except InvalidTableError as exc:
        raise LoopFileError(str(exc)) from exc


def dumps(q: LoopTable) -> str:
    head = "# name: %s\n" % q.name if q.name else ""
    return head + q.canonical_str()


def dumps_json(q: LoopTable) -> str:
    return json.dumps(
        {"n": q.n, "table": [list(r) for r in q.rows], "name": q.name},
        separators=(",", ": "), indent=1) + "\n"


def load(path: Union[str, Path]) -> LoopTable:
    path = Path(path)
    q = loads(path.read_text())
    return q if q.name else q.renamed(path.stem)


def save(q: LoopTable, path: Union[str, Path]) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(dumps_json(q))
    else:
        path.write_text(dumps(q))
