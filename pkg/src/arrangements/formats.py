"""Plain-text formats for arrangements, graphs and matrices.

Arrangement::

    dim 3
    1 0 0      # x
    0 1 0
    1 1 0
    0 0 1

Graph::

    vertices 3
    edge 0 1
    edge 1 2

Matrix::

    rows 2 cols 3
    1 0 1/2
    0 1 -3

``#`` starts a comment; blank lines are ignored.  Printing then parsing
gives back an equal object.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bridge import SimpleGraph, make_graph
from .core import Arrangement, make_arrangement
from .exact import QMatrix, format_rational, parse_rational


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


def _lines(text: str) -> list[list[_Token]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for piece in body.split():
            col = body.index(piece, col)
            tokens.append(_Token(piece, lineno, col + 1))
            col += len(piece)
        if tokens:
            out.append(tokens)
    return out


def _int(tok: _Token, what: str, minimum: int = 0) -> int:
    try:
        value = int(tok.text)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok.text!r}", tok.line, tok.column) from None
    if value < minimum:
        raise ParseError(f"{what} must be >= {minimum}", tok.line, tok.column)
    return value


def _rational(tok: _Token):
    try:
        return parse_rational(tok.text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), tok.line, tok.column) from None


def _header(lines: list[list[_Token]], keywords: tuple[str, ...]) -> list[int]:
    if not lines:
        raise ParseError(f"missing '{' '.join(k + ' N' for k in keywords)}' header", 1)
    head = lines[0]
    if len(head) != 2 * len(keywords):
        raise ParseError(
            f"header must be '{' '.join(k + ' N' for k in keywords)}'", head[0].line, head[0].column
        )
    values = []
    for i, kw in enumerate(keywords):
        tok = head[2 * i]
        if tok.text != kw:
            raise ParseError(f"expected {kw!r}, got {tok.text!r}", tok.line, tok.column)
        values.append(_int(head[2 * i + 1], f"{kw} count"))
    return values


def _rows(lines: list[list[_Token]], width: int) -> list[list]:
    rows = []
    for toks in lines:
        if len(toks) != width:
            last = toks[-1]
            raise ParseError(
                f"expected {width} entries, got {len(toks)}", last.line, last.column
            )
        rows.append([_rational(t) for t in toks])
    return rows


def parse_arrangement(text: str) -> Arrangement:
    """Syntax problems raise ParseError; invalid normals raise ArrangementError."""
    lines = _lines(text)
    (dim,) = _header(lines, ("dim",))
    if dim < 1:
        raise ParseError("dim must be >= 1", lines[0][1].line, lines[0][1].column)
    return make_arrangement(dim, _rows(lines[1:], dim))


def format_arrangement(a: Arrangement) -> str:
    out = [f"dim {a.ambient_dim}"]
    out.extend(" ".join(format_rational(x) for x in h.normal) for h in a.hyperplanes)
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    lines = _lines(text)
    (m,) = _header(lines, ("vertices",))
    edges = []
    for toks in lines[1:]:
        if toks[0].text != "edge" or len(toks) != 3:
            raise ParseError("expected 'edge u v'", toks[0].line, toks[0].column)
        edges.append((_int(toks[1], "vertex index"), _int(toks[2], "vertex index")))
    return make_graph(m, edges)


def format_graph(g: SimpleGraph) -> str:
    out = [f"vertices {g.vertex_count}"]
    out.extend(f"edge {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> QMatrix:
    lines = _lines(text)
    r, c = _header(lines, ("rows", "cols"))
    body = lines[1:]
    if len(body) != r:
        where = body[-1][0] if body else lines[0][0]
        raise ParseError(f"expected {r} rows, got {len(body)}", where.line, where.column)
    return QMatrix.from_rows(_rows(body, c), c)


def format_matrix(m: QMatrix) -> str:
    out = [f"rows {m.rows} cols {m.cols}"]
    out.extend(" ".join(format_rational(x) for x in row) for row in m.to_rows())
    return "\n".join(out) + "\n"
