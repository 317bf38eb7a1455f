"""Matrix text and JSON formats.

Text::

    n 3 maxplus shape=unitriangular
    0 1 -inf
    -inf 0 2/3
    -inf -inf 0

Blank lines and ``#`` comments are ignored.  JSON is
``{"n": 3, "kind": "maxplus", "rows": [["0", "1", "-inf"], ...]}`` with an
optional ``"shape"``.  Several text matrices may follow each other in one file.
"""

from __future__ import annotations

import json

from .matrix import Matrix, Shape, ShapeError
from .semiring import Kind, KindMismatch, format_value, parse_value


class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + message)


def _tokens(line: str):
    """(column, token) pairs, columns 1-based."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield no, line


def _parse_header(no: int, line: str):
    toks = _tokens(line)
    if len(toks) < 3 or toks[0][1] != "n":
        raise MatrixFormatError("expected header 'n <dim> <kind> [shape=...]'", no, 1)
    col, dim = toks[1]
    try:
        n = int(dim)
    except ValueError:
        raise MatrixFormatError(f"bad dimension {dim!r}", no, col) from None
    if n < 1:
        raise MatrixFormatError("dimension must be positive", no, col)
    col, kind_tok = toks[2]
    try:
        kind = Kind.parse(kind_tok)
    except ValueError as exc:
        raise MatrixFormatError(str(exc), no, col) from None
    shape = None
    for col, tok in toks[3:]:
        key, _, val = tok.partition("=")
        if key != "shape" or not val:
            raise MatrixFormatError(f"unknown header attribute {tok!r}", no, col)
        try:
            shape = Shape.parse(val)
        except ValueError as exc:
            raise MatrixFormatError(str(exc), no, col) from None
    return n, kind, shape


def _build(rows, kind, shape, line=None) -> Matrix:
    try:
        return Matrix(rows, kind, shape=shape)
    except (ShapeError, KindMismatch) as exc:
        raise MatrixFormatError(str(exc), line) from None


def parse_text_all(text: str) -> list:
    lines = list(_content_lines(text))
    out, pos = [], 0
    if not lines:
        raise MatrixFormatError("empty input")
    while pos < len(lines):
        no, line = lines[pos]
        n, kind, shape = _parse_header(no, line)
        pos += 1
        rows = []
        for r in range(n):
            if pos >= len(lines):
                raise MatrixFormatError(f"expected {n} rows, found {r}", no)
            rno, rline = lines[pos]
            toks = _tokens(rline)
            if len(toks) != n:
                raise MatrixFormatError(f"expected {n} entries, found {len(toks)}", rno, 1)
            row = []
            for col, tok in toks:
                try:
                    row.append(parse_value(tok, kind))
                except ValueError as exc:
                    raise MatrixFormatError(str(exc), rno, col) from None
            rows.append(row)
            pos += 1
        out.append(_build(rows, kind, shape, no))
    return out


def parse_text(text: str) -> Matrix:
    mats = parse_text_all(text)
    if len(mats) != 1:
        raise MatrixFormatError(f"expected one matrix, found {len(mats)}")
    return mats[0]


def from_json_obj(obj) -> Matrix:
    if not isinstance(obj, dict) or "rows" not in obj or "kind" not in obj:
        raise MatrixFormatError("JSON matrix needs 'kind' and 'rows'")
    try:
        kind = Kind.parse(str(obj["kind"]))
        shape = Shape.parse(obj["shape"]) if obj.get("shape") else None
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None
    rows = obj["rows"]
    n = obj.get("n", len(rows))
    if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise MatrixFormatError(f"rows do not form a {n} x {n} matrix")
    parsed = []
    for i, r in enumerate(rows, 1):
        line = []
        for j, tok in enumerate(r, 1):
            try:
                line.append(parse_value(str(tok), kind))
            except ValueError as exc:
                raise MatrixFormatError(f"row {i}, entry {j}: {exc}") from None
        parsed.append(line)
    return _build(parsed, kind, shape)


def parse_json(text: str) -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(exc.msg, exc.lineno, exc.colno) from None
    return from_json_obj(obj)


def parse_any(text: str) -> list:
    """JSON (one matrix or a list) when the input starts with '{' or '[', text otherwise."""
    s = text.lstrip()
    if s.startswith("{"):
        return [parse_json(text)]
    if s.startswith("["):
        try:
            objs = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(exc.msg, exc.lineno, exc.colno) from None
        return [from_json_obj(o) for o in objs]
    return parse_text_all(text)


def to_text(A: Matrix, shape: Shape | None = None) -> str:
    head = f"n {A.n} {A.kind.value}" + (f" shape={shape.value}" if shape else "")
    body = [" ".join(format_value(v, A.kind) for v in r) for r in A.rows]
    return "\n".join([head, *body]) + "\n"


def to_json_obj(A: Matrix) -> dict:
    return {"n": A.n, "kind": A.kind.value,
            "rows": [[format_value(v, A.kind) for v in r] for r in A.rows]}


def to_json(A: Matrix) -> str:
    return json.dumps(to_json_obj(A))
