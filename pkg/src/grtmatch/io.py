"""Plain-text coloured graph files.

A header line ``n q`` is followed by one ``u v c`` line per coloured edge
(``0 <= u < v < n``, ``0 <= c <= q``, colour 0 meaning uncoloured). Lines
starting with ``#`` are comments. Files are written sorted with LF endings;
reading accepts any line order.
"""

from __future__ import annotations

from pathlib import Path

from .colouring import ColouredGraph
from .graph import Graph


class GraphFileError(ValueError):
    pass


def dumps(cg: ColouredGraph) -> str:
    rows = sorted((u, v, c) for c, g in enumerate(cg.layers) for u, v in g.edges())
    lines = [f"{cg.n} {cg.q}"] + [f"{u} {v} {c}" for u, v, c in rows]
    return "\n".join(lines) + "\n"


def _ints(line: str, count: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFileError(f"line {lineno}: expected {count} fields, got {len(parts)}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GraphFileError(f"line {lineno}: non-integer field in {line!r}") from None


def loads(text: str) -> ColouredGraph:
    rows = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    rows = [(i, ln) for i, ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphFileError("missing header line 'n q'")
    n, q = _ints(rows[0][1], 2, rows[0][0])
    if n < 0 or q < 0:
        raise GraphFileError("n and q must be non-negative")
    edges: list[list[tuple[int, int]]] = [[] for _ in range(q + 1)]
    seen: set[tuple[int, int, int]] = set()
    for lineno, ln in rows[1:]:
        u, v, c = _ints(ln, 3, lineno)
        if not 0 <= u < v < n:
            raise GraphFileError(f"line {lineno}: need 0 <= u < v < {n}, got {u} {v}")
        if not 0 <= c <= q:
            raise GraphFileError(f"line {lineno}: colour {c} outside 0..{q}")
        if (u, v, c) in seen:
            raise GraphFileError(f"line {lineno}: duplicate edge {u} {v} {c}")
        seen.add((u, v, c))
        edges[c].append((u, v))
    try:
        return ColouredGraph(tuple(Graph.from_edges(n, es) for es in edges))
    except ValueError as exc:
        raise GraphFileError(str(exc)) from None


def read(path: str | Path) -> ColouredGraph:
    return loads(Path(path).read_text())


def write(path: str | Path, cg: ColouredGraph) -> None:
    Path(path).write_text(dumps(cg), newline="\n")
