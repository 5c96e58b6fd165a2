"""Text formats for graphs and weight vectors.

Graph files: first line ``digraph <n>`` or ``graph <n>``; each following
non-empty line is one arc/edge ``u v`` (0-based); ``#`` starts a comment.
Arcs are ordered u->v, edges unordered.  Weight files hold one rational
per line: ``p/q``, an integer, or a decimal; the count must match the
graph order and the sum must be exactly 1.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import OrientedGraph, UndirectedGraph
from .lagrangian import WeightVector


class ParseError(ValueError):
    def __init__(self, path: str, line_no: int, message: str) -> None:
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


def _content_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_graph_text(text: str, path: str = "<string>"):
    """Parse graph text into an OrientedGraph or UndirectedGraph."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(path, 1, "empty graph file")
    line_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("digraph", "graph"):
        raise ParseError(path, line_no, f"expected 'digraph <n>' or 'graph <n>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(path, line_no, f"bad vertex count {parts[1]!r}") from None
    if n < 0:
        raise ParseError(path, line_no, "vertex count must be nonnegative")
    directed = parts[0] == "digraph"

    pairs = []
    seen = set()
    for line_no, line in lines[1:]:
        tok = line.split()
        if len(tok) != 2:
            raise ParseError(path, line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(path, line_no, f"non-integer endpoint in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(path, line_no, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise ParseError(path, line_no, f"self-loop at {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(path, line_no, f"duplicate {'arc' if directed else 'edge'} {u} {v}")
        if directed and (v, u) in seen:
            raise ParseError(path, line_no, f"antiparallel pair {u}<->{v}: not an orientation")
        seen.add(key)
        pairs.append((u, v))
    if directed:
        return OrientedGraph(n, pairs)
    return UndirectedGraph(n, pairs)


def parse_graph(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), path=path)


def parse_rational(token: str) -> Fraction:
    """p/q, integer, or decimal literal, parsed exactly."""
    return Fraction(token)


def parse_weights_text(text: str, expected_n: int | None = None, path: str = "<string>") -> WeightVector:
    entries = []
    for line_no, line in _content_lines(text):
        try:
            entries.append(parse_rational(line))
        except (ValueError, ZeroDivisionError):
            raise ParseError(path, line_no, f"bad rational {line!r}") from None
    if expected_n is not None and len(entries) != expected_n:
        raise ParseError(
            path, 0, f"expected {expected_n} weights, got {len(entries)}"
        )
    return WeightVector(entries)


def parse_weights(path: str, expected_n: int | None = None) -> WeightVector:
    with open(path, encoding="utf-8") as fh:
        return parse_weights_text(fh.read(), expected_n=expected_n, path=path)
