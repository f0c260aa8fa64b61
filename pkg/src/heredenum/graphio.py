"""Plain-text graph file parsing.

Grammar (one block per graph):

    n m          # vertex count, edge count
    u v          # m edge lines, 0-based ids
    ...

``#`` starts a comment anywhere on a line.  Blocks are separated by one or
more blank lines; a plain graph file holds exactly one block, the
forbidden-family file any number.
"""

from __future__ import annotations

from .errors import InputFormatError
from .graphs import Graph


def _tokenize(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        out.append((lineno, line))
    return out


def parse_graph_blocks(text: str) -> list[Graph]:
    lines = _tokenize(text)
    graphs = []
    i = 0
    while i < len(lines):
        while i < len(lines) and not lines[i][1]:
            i += 1
        if i >= len(lines):
            break
        lineno, header = lines[i]
        parts = header.split()
        if len(parts) != 2:
            raise InputFormatError("expected header 'n m'", lineno)
        try:
            n, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError("expected integers in header 'n m'", lineno) from None
        if n < 0 or m < 0:
            raise InputFormatError("negative counts in header", lineno)
        i += 1
        edges = []
        while len(edges) < m:
            if i >= len(lines):
                raise InputFormatError(f"expected {m} edges, found {len(edges)}", lineno)
            elineno, line = lines[i]
            i += 1
            if not line:
                raise InputFormatError(f"expected {m} edges, found {len(edges)}", elineno)
            eparts = line.split()
            if len(eparts) != 2:
                raise InputFormatError("expected edge line 'u v'", elineno)
            try:
                u, v = int(eparts[0]), int(eparts[1])
            except ValueError:
                raise InputFormatError("expected integer vertex ids", elineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise InputFormatError(f"vertex id outside 0..{n - 1}", elineno)
            if u == v:
                raise InputFormatError("self-loop not allowed", elineno)
            edges.append((u, v))
        graphs.append(Graph(n, edges))
    return graphs


def parse_graph(text: str) -> Graph:
    graphs = parse_graph_blocks(text)
    if not graphs:
        raise InputFormatError("no graph block found", None)
    if len(graphs) > 1:
        raise InputFormatError("expected a single graph block", None)
    return graphs[0]


def format_graph(g: Graph) -> str:
    edges = sorted(g.edges())
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
