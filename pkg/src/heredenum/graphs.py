"""Immutable graph representation and elementary set/graph operations.

Vertex sets are plain Python ints used as bitmasks (bit v set <=> vertex v
in the set), which gives O(n/word) unions/intersections and a canonical,
deterministic ascending iteration order via :func:`bits`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

Variant = str
GENERAL = "general"
CONNECTED = "connected"
VARIANTS = (GENERAL, CONNECTED)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Vertices of a mask in ascending id order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return bin(mask).count("1")


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def as_tuple(mask: int) -> tuple[int, ...]:
    """Canonical form of a vertex set: ascending tuple of ids."""
    return tuple(bits(mask))


class Graph:
    """Simple undirected graph on dense vertex ids 0..n-1.

    Immutable and hashable; adjacency is stored as one neighbor bitmask per
    vertex.  No self-loops; symmetry is enforced at construction.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._hash = hash((n, self.adj))

    @classmethod
    def from_adj(cls, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g._hash = hash((g.n, adj))
        return g

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bit_count(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def edge_count(self, within: int | None = None) -> int:
        if within is None:
            within = self.full_mask
        total = 0
        for v in bits(within):
            total += bit_count(self.adj[v] & within)
        return total // 2

    def neighbors(self, mask: int) -> int:
        """Open neighborhood of a vertex set: union of adjacencies minus the set."""
        nb = 0
        for v in bits(mask):
            nb |= self.adj[v]
        return nb & ~mask

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph.from_adj(
            tuple((full & ~self.adj[v]) & ~(1 << v) for v in range(self.n))
        )

    def component_of(self, v: int, within: int | None = None) -> int:
        """Mask of the connected component of v inside ``within``."""
        if within is None:
            within = self.full_mask
        if not within >> v & 1:
            raise DomainError(f"vertex {v} not in the given set")
        comp = 1 << v
        frontier = self.adj[v] & within & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & within & ~comp
        return comp

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of G[within], ordered by smallest member id."""
        if within is None:
            within = self.full_mask
        out = []
        remaining = within
        while remaining:
            v = lowest_bit(remaining)
            comp = self.component_of(v, remaining)
            out.append(comp)
            remaining &= ~comp
        return out

    def is_connected(self, within: int | None = None) -> bool:
        """True iff G[within] is connected and nonempty."""
        if within is None:
            within = self.full_mask
        if within == 0:
            return False
        return self.component_of(lowest_bit(within), within) == within

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask != mask & ~(1 << v):
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def is_acyclic(self, within: int | None = None) -> bool:
        if within is None:
            within = self.full_mask
        return self.edge_count(within) == bit_count(within) - len(self.components(within))

    def add_universal_vertex(self) -> "Graph":
        n = self.n
        full = self.full_mask
        adj = tuple(self.adj[v] | (1 << n) for v in range(n)) + (full,)
        return Graph.from_adj(adj)

    def maximal_cliques(self, within: int | None = None) -> list[int]:
        """All maximal cliques of G[within] (Bron-Kerbosch with pivoting),
        sorted canonically."""
        if within is None:
            within = self.full_mask
        if within == 0:
            return []
        out: list[int] = []

        def expand(r: int, p: int, x: int):
            if not p and not x:
                out.append(r)
                return
            pivot = lowest_bit(p | x)
            best = self.adj[pivot] & p
            for u in bits(p | x):
                cand = self.adj[u] & p
                if bit_count(cand) > bit_count(best):
                    best = cand
            for v in bits(p & ~best):
                b = 1 << v
                expand(r | b, p & self.adj[v], x & self.adj[v])
                p &= ~b
                x |= b

        expand(0, within, 0)
        out.sort(key=as_tuple)
        return out


@dataclass(frozen=True)
class SubgraphView:
    """Induced subgraph with a total, injective id mapping to the parent."""

    parent: Graph
    selected: int
    graph: Graph
    to_parent: tuple[int, ...]

    def to_parent_mask(self, local_mask: int) -> int:
        m = 0
        for i in bits(local_mask):
            m |= 1 << self.to_parent[i]
        return m

    def to_local(self, parent_vertex: int) -> int:
        return self.to_parent.index(parent_vertex)

    def to_local_mask(self, parent_mask: int) -> int:
        m = 0
        for i, p in enumerate(self.to_parent):
            if parent_mask >> p & 1:
                m |= 1 << i
        return m


def induced_subgraph(g: Graph, mask: int) -> SubgraphView:
    """View of G[U] with local ids 0..|U|-1 in ascending parent-id order."""
    if mask & ~g.full_mask:
        raise DomainError("vertex set contains ids outside the graph")
    order = tuple(bits(mask))
    index = {p: i for i, p in enumerate(order)}
    adj = []
    for p in order:
        row = g.adj[p] & mask
        local = 0
        for q in bits(row):
            local |= 1 << index[q]
        adj.append(local)
    return SubgraphView(parent=g, selected=mask, graph=Graph.from_adj(tuple(adj)), to_parent=order)


def induce(g: Graph, mask: int) -> Graph:
    """Induced subgraph as a bare Graph (ids remapped ascending)."""
    return induced_subgraph(g, mask).graph
