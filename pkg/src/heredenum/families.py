"""Named small graphs and generated graph families.

These are the fixtures and forbidden-subgraph building blocks used by
recognition and by the test suite.  Vertex numbering of each named graph is
fixed so tests can refer to concrete vertices.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from itertools import combinations, permutations

from .errors import DomainError
from .graphio import parse_graph_blocks
from .graphs import Graph


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, list(combinations(range(k), 2)))


def empty_graph(k: int) -> Graph:
    return Graph(k)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


# Named small graphs (see the package README for drawings).

P2 = path_graph(2)
P3 = path_graph(3)
P4 = path_graph(4)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
K3 = complete_graph(3)
TWO_K1 = empty_graph(2)
TWO_K2 = disjoint_union(P2, P2)
CO_P3 = P3.complement()  # one edge plus an isolated vertex
CLAW = star_graph(3)
PAW = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
DIAMOND = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
HOUSE = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (0, 4)])
BULL = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
DART = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)])
GEM = Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
NET = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
TENT = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])
K5_MINUS_E = Graph(5, [e for e in combinations(range(5), 2) if e != (3, 4)])
DOMINO = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
LONG_CLAW = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
WHIPPING_TOP = Graph(
    7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (5, 6)]
)
DAG_GRAPH = Graph(7, [(0, 1), (3, 4), (2, 5), (5, 6), (1, 5), (3, 5), (1, 3)])
DDAG_GRAPH = Graph(
    8,
    [
        (0, 1), (3, 4), (2, 6), (5, 6), (5, 7), (2, 7), (0, 6),
        (6, 7), (4, 7), (1, 6), (3, 6), (3, 7), (1, 7), (1, 3),
    ],
)


def lollipop(cycle_len: int) -> Graph:
    """Cycle with a 2-edge path hanging off one cycle vertex."""
    g = cycle_graph(cycle_len)
    edges = list(g.edges()) + [(0, cycle_len), (cycle_len, cycle_len + 1)]
    return Graph(cycle_len + 2, edges)


def spider_of_cherries(k: int) -> Graph:
    """Tree on 2k+1 vertices: center 0, k legs of length two."""
    edges = []
    for i in range(k):
        x, y = 1 + 2 * i, 2 + 2 * i
        edges.append((0, x))
        edges.append((x, y))
    return Graph(2 * k + 1, edges)


def cocktail_party_with_pendant(k: int) -> Graph:
    """2k pair vertices adjacent across pairs, a universal u, and a pendant v on u.

    Vertices 0..2k-1 are the pairs (2i, 2i+1); u = 2k; v = 2k+1.
    """
    n = 2 * k + 2
    u, v = 2 * k, 2 * k + 1
    edges = []
    for a, b in combinations(range(2 * k), 2):
        if a // 2 != b // 2:
            edges.append((a, b))
    edges.extend((u, x) for x in range(2 * k))
    edges.append((u, v))
    return Graph(n, edges)


def cycle_with_cherries(cycle_len: int, k: int) -> Graph:
    """Cycle plus k 2-edge paths hanging off cycle vertex 0."""
    g = cycle_graph(cycle_len)
    edges = list(g.edges())
    for i in range(k):
        x, y = cycle_len + 2 * i, cycle_len + 2 * i + 1
        edges.append((0, x))
        edges.append((x, y))
    return Graph(cycle_len + 2 * k, edges)


def disjoint_triangles(k: int) -> Graph:
    return disjoint_union(*[K3] * k)


def disjoint_squares(k: int) -> Graph:
    return disjoint_union(*[C4] * k)


@lru_cache(maxsize=None)
def _canonical_code(g: Graph) -> tuple:
    best = None
    verts = range(g.n)
    for perm in permutations(verts):
        code = tuple(
            1 if g.has_edge(perm[i], perm[j]) else 0
            for i, j in combinations(verts, 2)
        )
        if best is None or code < best:
            best = code
    return (g.n, best)


@lru_cache(maxsize=None)
def graphs_with_universal_vertex(order: int) -> tuple[Graph, ...]:
    """All graphs on ``order`` vertices having a universal vertex, up to isomorphism.

    These are the forbidden induced subgraphs of the degree-(order-2)-bounded
    graphs.  Practical for order <= 6.
    """
    if order < 2:
        raise DomainError("need order >= 2")
    base = order - 1
    pairs = list(combinations(range(base), 2))
    seen = {}
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        h = Graph(base, edges)
        g = h.add_universal_vertex()
        key = _canonical_code(g)
        if key not in seen:
            seen[key] = g
    return tuple(seen[k] for k in sorted(seen))


def four_leaf_power_forbidden() -> tuple[Graph, ...]:
    """Finite (non-hole) forbidden induced subgraphs of basic 4-leaf powers.

    Loaded from the packaged data file so the list can be inspected and
    edited without touching code.
    """
    text = resources.files("heredenum.data").joinpath("four_leaf_power.txt").read_text()
    return tuple(parse_graph_blocks(text))
