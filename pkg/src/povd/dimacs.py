"""DIMACS-style graph files: ``c`` comments, one ``p edge n m`` header,
then ``e u v`` lines with 1-indexed endpoints.

Vertices are mapped to internal ids 0..n-1 at this boundary; everything
inside the package is 0-indexed.
"""

from __future__ import annotations

import warnings

from .errors import IndexOutOfRangeError, ParseError, SelfLoopError
from .graph import Graph


class DuplicateEdgeWarning(UserWarning):
    """An edge line repeated an earlier edge; the duplicate was merged."""


def parse_graph(text: str) -> Graph:
    """Parse a graph file; raises ParseError and friends with line numbers."""
    g: Graph | None = None
    declared_m = 0
    seen_edges = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if g is not None:
                raise ParseError("second 'p' line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"non-integer header counts {line!r}", lineno)
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in header", lineno)
            g = Graph.from_edges(n, [])
        elif fields[0] == "e":
            if g is None:
                raise ParseError("edge before 'p' header", lineno)
            if len(fields) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"non-integer endpoints {line!r}", lineno)
            for x in (u, v):
                if not 1 <= x <= g.n:
                    raise IndexOutOfRangeError(
                        f"vertex {x} outside 1..{g.n}", lineno
                    )
            if u == v:
                raise SelfLoopError(f"line {lineno}: self-loop at vertex {u}")
            if not g.add_edge(u - 1, v - 1):
                warnings.warn(
                    f"line {lineno}: duplicate edge ({u}, {v}) merged",
                    DuplicateEdgeWarning,
                    stacklevel=2,
                )
            seen_edges += 1
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if g is None:
        raise ParseError("missing 'p edge' header")
    if seen_edges != declared_m:
        warnings.warn(
            f"header declared {declared_m} edges, file had {seen_edges}",
            DuplicateEdgeWarning,
            stacklevel=2,
        )
    return g


def serialize_graph(g: Graph) -> str:
    """Render a graph back to the file format.

    Live vertices are written 1-indexed in ascending-id order; graphs whose
    ids are sparse (after deletions or contractions) are compacted, which
    relabels but never reshapes.
    """
    index = {v: i + 1 for i, v in enumerate(g.vertices())}
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {index[u]} {index[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_solution(text: str, n: int) -> set[int]:
    """Parse one 1-indexed vertex per line into a 0-indexed set."""
    out: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise ParseError(f"not a vertex number: {line!r}", lineno)
        if not 1 <= v <= n:
            raise IndexOutOfRangeError(f"vertex {v} outside 1..{n}", lineno)
        out.add(v - 1)
    return out
