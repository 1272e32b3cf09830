"""Plain-text instance format: header "n m", then one "u v" line per edge.

Ids are 0-based integers; blank lines and '#' comments are skipped.  The
canonical serialization sorts edges, uses single spaces and LF endings, so
parse-serialize round-trips are byte-exact on canonical files.
"""

from __future__ import annotations

from typing import TextIO

from .errors import ParseError
from .graph import Graph


def parse_instance(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {raw!r}", line_no)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw!r}", line_no)
        if n is None:
            n, m = x, y
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", line_no)
            continue
        if not (0 <= x < n and 0 <= y < n):
            raise ParseError(f"vertex out of range in edge {x} {y}", line_no)
        if x == y:
            raise ParseError(f"self-loop {x} {y}", line_no)
        key = (x, y) if x < y else (y, x)
        if key in seen:
            raise ParseError(f"duplicate edge {x} {y}", line_no)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing header line")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, file has {len(edges)}")
    return Graph(range(n), edges)


def serialize_instance(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def load_instance(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_instance(fh.read())


def dump_instance(g: Graph, fh: TextIO) -> None:
    fh.write(serialize_instance(g))
