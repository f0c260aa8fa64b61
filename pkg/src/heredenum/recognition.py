"""Graph-class membership tests and structural certificates.

Hereditary classes are described by :class:`ClassSpec`.  Membership checks
are memoized on the (spec, graph) pair; graphs are small and immutable, so
this turns the heavy exhaustive test sweeps into dictionary lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import families
from .errors import ContractViolation, DomainError, UnsupportedPatternError
from .graphs import Graph, bit_count, bits, induce, lowest_bit, mask_of

MAX_PATTERN_ORDER = 8

# ClassSpec kinds.
EDGELESS = "edgeless"
CLUSTER = "cluster"
CLIQUE = "clique"
COMPLETE_P_PARTITE = "complete-p-partite"
COMPLETE_BIPARTITE = "complete-bipartite"
SPLIT = "split"
COMPLETE_SPLIT = "complete-split"
PSEUDO_SPLIT = "pseudo-split"
THRESHOLD = "threshold"
DEGREE_BOUNDED = "degree-bounded"
TRIVIALLY_PERFECT = "trivially-perfect"
INTERVAL = "interval"
CHORDAL = "chordal"
UNIT_INTERVAL = "unit-interval"
BLOCK = "block"
THREE_LEAF_POWER = "three-leaf-power"
BASIC_FOUR_LEAF_POWER = "basic-four-leaf-power"
WHEEL_FREE = "wheel-free"
FOREST = "forest"
FINITE_FORBIDDEN = "finite-forbidden"

ALL_KINDS = (
    EDGELESS, CLUSTER, CLIQUE, COMPLETE_P_PARTITE, COMPLETE_BIPARTITE, SPLIT,
    COMPLETE_SPLIT, PSEUDO_SPLIT, THRESHOLD, DEGREE_BOUNDED, TRIVIALLY_PERFECT,
    INTERVAL, CHORDAL, UNIT_INTERVAL, BLOCK, THREE_LEAF_POWER,
    BASIC_FOUR_LEAF_POWER, WHEEL_FREE, FOREST, FINITE_FORBIDDEN,
)


@dataclass(frozen=True)
class ClassSpec:
    """Descriptor of a hereditary graph class."""

    kind: str
    p: int | None = None
    d: int | None = None
    forbidden: tuple[Graph, ...] = ()

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise DomainError(f"unknown class kind {self.kind!r}")
        if self.kind == COMPLETE_P_PARTITE:
            if self.p is None or self.p < 1:
                raise DomainError("complete-p-partite needs p >= 1")
        if self.kind == DEGREE_BOUNDED:
            if self.d is None or self.d < 0:
                raise DomainError("degree-bounded needs d >= 0")
        if self.kind == FINITE_FORBIDDEN:
            if not self.forbidden:
                raise DomainError("finite-forbidden needs a nonempty family")
            for f in self.forbidden:
                if f.n > MAX_PATTERN_ORDER:
                    raise DomainError(
                        f"forbidden graph on {f.n} vertices exceeds the "
                        f"supported order {MAX_PATTERN_ORDER}"
                    )
                if f.n == 0:
                    raise DomainError("forbidden graph must be nonempty")
            for a, b in combinations(self.forbidden, 2):
                if contains_induced(a, b) or contains_induced(b, a):
                    raise DomainError(
                        "forbidden family is not minimal: one member is an "
                        "induced subgraph of another"
                    )

    def __str__(self) -> str:
        if self.kind == COMPLETE_P_PARTITE:
            return f"{self.kind}(p={self.p})"
        if self.kind == DEGREE_BOUNDED:
            return f"{self.kind}(d={self.d})"
        if self.kind == FINITE_FORBIDDEN:
            return f"{self.kind}({len(self.forbidden)} graphs)"
        return self.kind


def spec(kind: str, p: int | None = None, d: int | None = None,
         forbidden=()) -> ClassSpec:
    return ClassSpec(kind, p=p, d=d, forbidden=tuple(forbidden))


# Finite forbidden families of the purely finite classes (appendix table).
_STATIC_FAMILIES = {
    EDGELESS: (families.P2,),
    CLUSTER: (families.P3,),
    CLIQUE: (families.TWO_K1,),
    SPLIT: (families.TWO_K2, families.C4, families.C5),
    COMPLETE_SPLIT: (families.CO_P3, families.C4),
    PSEUDO_SPLIT: (families.TWO_K2, families.C4),
    THRESHOLD: (families.TWO_K2, families.C4, families.P4),
    TRIVIALLY_PERFECT: (families.P4, families.C4),
}

# Finite forbidden graphs on top of chordality (appendix table).
_CHORDAL_EXTRA = {
    UNIT_INTERVAL: (families.CLAW, families.NET, families.TENT),
    BLOCK: (families.DIAMOND,),
    THREE_LEAF_POWER: (families.BULL, families.DART, families.GEM),
}


def finite_family(cs: ClassSpec) -> tuple[Graph, ...] | None:
    """The class's finite forbidden family, or None if it has none."""
    if cs.kind in _STATIC_FAMILIES:
        return _STATIC_FAMILIES[cs.kind]
    if cs.kind == COMPLETE_P_PARTITE:
        return (families.CO_P3, families.complete_graph(cs.p + 1))
    if cs.kind == COMPLETE_BIPARTITE:
        return (families.CO_P3, families.K3)
    if cs.kind == DEGREE_BOUNDED:
        return families.graphs_with_universal_vertex(cs.d + 2)
    if cs.kind == FINITE_FORBIDDEN:
        return cs.forbidden
    return None


@lru_cache(maxsize=None)
def chordal_extra_family(kind: str) -> tuple[Graph, ...]:
    """Non-hole forbidden graphs of the chordal-plus-finite classes."""
    if kind in _CHORDAL_EXTRA:
        return _CHORDAL_EXTRA[kind]
    if kind == BASIC_FOUR_LEAF_POWER:
        return families.four_leaf_power_forbidden()
    raise DomainError(f"{kind} is not a chordal-plus-finite class")


CHORDAL_PLUS_FINITE = (UNIT_INTERVAL, BLOCK, THREE_LEAF_POWER, BASIC_FOUR_LEAF_POWER)


def restriction_level(cs: ClassSpec) -> int | None:
    """Restriction level t of the class's base restricted solver."""
    fam = finite_family(cs)
    if fam is not None:
        return max(f.n for f in fam)
    if cs.kind == CHORDAL:
        return 3
    if cs.kind in CHORDAL_PLUS_FINITE:
        return max(f.n for f in chordal_extra_family(cs.kind))
    if cs.kind == WHEEL_FREE:
        return 5
    return None


def _has_universal_vertex(g: Graph) -> bool:
    full = g.full_mask
    return any(g.adj[v] == full & ~(1 << v) for v in range(g.n))


def closed_under_universal(cs: ClassSpec) -> bool:
    """A class is closed under adding universal vertices iff no forbidden
    graph contains one.  Structural hole families never do."""
    fam = finite_family(cs)
    if fam is not None:
        return not any(_has_universal_vertex(f) for f in fam)
    if cs.kind in (INTERVAL, CHORDAL):
        return True
    if cs.kind in CHORDAL_PLUS_FINITE:
        return not any(_has_universal_vertex(f) for f in chordal_extra_family(cs.kind))
    if cs.kind in (WHEEL_FREE, FOREST):
        return False
    raise DomainError(f"no capability entry for {cs.kind}")


@lru_cache(maxsize=None)
def _is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return False
    if not g.is_connected():
        return False
    full = g.full_mask
    return all(g.is_connected(full & ~(1 << v)) for v in range(g.n))


def biconnectivity_threshold(cs: ClassSpec) -> int | None:
    """Smallest c such that every forbidden graph of order >= c is
    biconnected, or None when no finite c works (infinite non-biconnected
    family).  Holes are all biconnected, so only finite members matter."""
    if cs.kind in (CHORDAL, INTERVAL):
        fam: tuple[Graph, ...] = ()
    elif cs.kind in CHORDAL_PLUS_FINITE:
        fam = chordal_extra_family(cs.kind)
    elif cs.kind == WHEEL_FREE:
        fam = ()
    elif cs.kind == FOREST:
        fam = ()
    else:
        fam = finite_family(cs)
        if fam is None:
            raise DomainError(f"no capability entry for {cs.kind}")
    worst = 0
    for f in fam:
        if not _is_biconnected(f):
            worst = max(worst, f.n)
    return worst + 1


# ---------------------------------------------------------------------------
# Induced-pattern search


def contains_induced(pattern: Graph, g: Graph, return_witness: bool = False):
    """Does G contain the pattern as an induced subgraph?

    Backtracking permutation matching with degree pruning; patterns are
    capped at MAX_PATTERN_ORDER vertices.  With ``return_witness`` the result
    is a witness vertex mask (or None), otherwise a bool.
    """
    if pattern.n > MAX_PATTERN_ORDER:
        raise UnsupportedPatternError(
            f"pattern on {pattern.n} vertices exceeds bound {MAX_PATTERN_ORDER}"
        )
    witness = _find_induced(pattern, g)
    if return_witness:
        return witness
    return witness is not None


@lru_cache(maxsize=None)
def _find_induced(pattern: Graph, g: Graph) -> int | None:
    k, n = pattern.n, g.n
    if k > n:
        return None
    if k == 0:
        return 0
    # Most-constrained-first: place pattern vertices by descending degree.
    order = sorted(range(k), key=lambda v: (-pattern.degree(v), v))
    pdeg = [pattern.degree(v) for v in order]
    # For each position, pattern adjacency to earlier positions.
    earlier = []
    for i, v in enumerate(order):
        earlier.append([(j, pattern.has_edge(v, order[j])) for j in range(i)])
    assigned = [0] * k
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        need = pdeg[i]
        for cand in range(n):
            b = 1 << cand
            if used & b or bit_count(g.adj[cand]) < need:
                continue
            row = g.adj[cand]
            ok = True
            for j, adjacent in earlier[i]:
                if bool(row >> assigned[j] & 1) != adjacent:
                    ok = False
                    break
            if not ok:
                continue
            assigned[i] = cand
            used |= b
            if place(i + 1):
                return True
            used &= ~b
        return False

    if place(0):
        return mask_of(assigned)
    return None


# ---------------------------------------------------------------------------
# Chordality: PEO, hole witnesses, clique trees, minimal separators


@lru_cache(maxsize=None)
def _peo(g: Graph) -> tuple[int, ...] | None:
    """Perfect elimination ordering via maximum cardinality search, or None."""
    n = g.n
    if n == 0:
        return ()
    weight = [0] * n
    numbered = 0
    order = [0] * n  # filled from the back: MCS visit order reversed is a PEO
    for pos in range(n - 1, -1, -1):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        order[pos] = best
        numbered |= 1 << best
        for u in bits(g.adj[best] & ~numbered):
            weight[u] += 1
    # Verify the PEO property: later neighbors of each vertex form a clique.
    index = [0] * n
    for i, v in enumerate(order):
        index[v] = i
    for v in range(n):
        later = 0
        for u in bits(g.adj[v]):
            if index[u] > index[v]:
                later |= 1 << u
        if not g.is_clique(later):
            return None
    return tuple(order)


def is_chordal(g: Graph) -> bool:
    return _peo(g) is not None


@lru_cache(maxsize=None)
def find_hole(g: Graph) -> tuple[int, ...] | None:
    """Some induced cycle on >= 4 vertices, as a vertex tuple in cycle order."""
    for v in range(g.n):
        hole = _hole_through(g, v)
        if hole is not None:
            return hole
    return None


def _hole_through(g: Graph, v: int) -> tuple[int, ...] | None:
    nv = g.adj[v]
    closed = nv | (1 << v)
    for u in bits(nv):
        for w in bits(nv):
            if w <= u or g.has_edge(u, w):
                continue
            # Shortest u-w path avoiding N[v] (except the endpoints) is
            # induced in that subgraph, so together with v it is a hole.
            allowed = (g.full_mask & ~closed) | (1 << u) | (1 << w)
            path = _shortest_path(g, u, w, allowed)
            if path is not None:
                return (v, *path)
    return None


def _shortest_path(g: Graph, s: int, t: int, within: int) -> tuple[int, ...] | None:
    if not (within >> s & 1 and within >> t & 1):
        return None
    prev = {s: -1}
    frontier = [s]
    seen = 1 << s
    while frontier:
        nxt = []
        for u in frontier:
            for w in bits(g.adj[u] & within & ~seen):
                seen |= 1 << w
                prev[w] = u
                if w == t:
                    path = [w]
                    while prev[path[-1]] != -1:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                nxt.append(w)
        frontier = nxt
    return None


@lru_cache(maxsize=None)
def hole_vertices(g: Graph) -> int:
    """Mask of vertices contained in at least one hole."""
    result = 0
    for v in range(g.n):
        if _hole_through(g, v) is not None:
            result |= 1 << v
    return result


def vertex_in_hole(g: Graph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    return bool(hole_vertices(g) >> v & 1)


@dataclass(frozen=True)
class ChordalCertificate:
    peo: tuple[int, ...]
    cliques: tuple[int, ...]           # maximal cliques as masks
    tree_edges: tuple[tuple[int, int], ...]
    minimal_separators: tuple[int, ...]


@dataclass(frozen=True)
class HoleWitness:
    cycle: tuple[int, ...]


@lru_cache(maxsize=None)
def maximal_cliques_chordal(g: Graph) -> tuple[int, ...]:
    """Maximal cliques of a chordal graph from a PEO (at most n of them)."""
    peo = _peo(g)
    if peo is None:
        raise DomainError("graph is not chordal")
    index = [0] * g.n
    for i, v in enumerate(peo):
        index[v] = i
    cands = set()
    for v in peo:
        m = 1 << v
        for u in bits(g.adj[v]):
            if index[u] > index[v]:
                m |= 1 << u
        cands.add(m)
    cliques = [m for m in cands if not any(m != o and m & o == m for o in cands)]
    cliques.sort(key=lambda m: tuple(bits(m)))
    return tuple(cliques)


@lru_cache(maxsize=None)
def chordal_certificates(g: Graph):
    """Chordal certificate (PEO, clique tree, minimal separators) or a hole."""
    peo = _peo(g)
    if peo is None:
        hole = find_hole(g)
        assert hole is not None
        return HoleWitness(cycle=hole)
    cliques = maximal_cliques_chordal(g)
    k = len(cliques)
    # Maximum-weight spanning forest of the clique graph (weights are
    # intersection sizes) is a clique tree on each component.
    edges = []
    in_tree = [False] * k
    best_w = [-1] * k
    best_to = [-1] * k
    for start in range(k):
        if in_tree[start]:
            continue
        in_tree[start] = True
        for j in range(k):
            if not in_tree[j]:
                w = bit_count(cliques[start] & cliques[j])
                if w > best_w[j]:
                    best_w[j], best_to[j] = w, start
        while True:
            pick, pick_w = -1, 0
            for j in range(k):
                if not in_tree[j] and best_w[j] > pick_w:
                    pick, pick_w = j, best_w[j]
            if pick == -1:
                break
            in_tree[pick] = True
            edges.append((min(pick, best_to[pick]), max(pick, best_to[pick])))
            for j in range(k):
                if not in_tree[j]:
                    w = bit_count(cliques[pick] & cliques[j])
                    if w > best_w[j]:
                        best_w[j], best_to[j] = w, pick
    seps = sorted(
        {cliques[a] & cliques[b] for a, b in edges if cliques[a] & cliques[b]},
        key=lambda m: tuple(bits(m)),
    )
    return ChordalCertificate(
        peo=peo,
        cliques=cliques,
        tree_edges=tuple(sorted(edges)),
        minimal_separators=tuple(seps),
    )


def minimal_st_separators(g: Graph, s: int, t: int) -> list[int]:
    """All minimal s-t separators of a chordal graph.

    Candidates are the clique-tree edge labels; each is kept iff it puts s
    and t in different components and every separator vertex sees both the
    s-side and the t-side component.
    """
    if g.has_edge(s, t):
        return []
    cert = chordal_certificates(g)
    if isinstance(cert, HoleWitness):
        raise DomainError("graph is not chordal")
    out = []
    full = g.full_mask
    for sep in cert.minimal_separators:
        if sep >> s & 1 or sep >> t & 1:
            continue
        rest = full & ~sep
        cs = g.component_of(s, rest)
        if cs >> t & 1:
            continue
        ct = g.component_of(t, rest)
        if all(g.adj[y] & cs and g.adj[y] & ct for y in bits(sep)):
            out.append(sep)
    out.sort(key=lambda m: tuple(bits(m)))
    return out


# ---------------------------------------------------------------------------
# Trivially perfect graphs: generating forests


@dataclass(frozen=True)
class GeneratingForest:
    """Rooted forest whose ancestor relation equals adjacency."""

    parent: tuple[int | None, ...]
    postorder: tuple[int, ...]
    # ancestors/descendants include the vertex itself
    ancestors: tuple[int, ...] = field(repr=False, default=())
    descendants: tuple[int, ...] = field(repr=False, default=())
    depth: tuple[int, ...] = field(repr=False, default=())

    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]


@dataclass(frozen=True)
class NotTPWitness:
    component: int  # mask of a connected piece with no universal vertex


@lru_cache(maxsize=None)
def build_generating_forest(g: Graph):
    """Generating forest of a trivially perfect graph, by universal-vertex
    peeling, or a witness component with no universal vertex."""
    parent: list[int | None] = [None] * g.n
    depth = [0] * g.n
    postorder: list[int] = []

    def peel(comp: int, par: int | None, dep: int):
        root = -1
        for v in bits(comp):
            if g.adj[v] & comp == comp & ~(1 << v):
                root = v
                break
        if root == -1:
            return comp
        parent[root] = par
        depth[root] = dep
        for sub in g.components(comp & ~(1 << root)):
            w = peel(sub, root, dep + 1)
            if w is not None:
                return w
        postorder.append(root)
        return None

    for comp in g.components():
        witness = peel(comp, None, 0)
        if witness is not None:
            return NotTPWitness(component=witness)

    # Postorder above appends parents after children but visits sibling
    # subtrees before the parent closes; rebuild a clean postorder.
    children: list[list[int]] = [[] for _ in range(g.n)]
    roots = []
    for v in range(g.n):
        if parent[v] is None:
            roots.append(v)
        else:
            children[parent[v]].append(v)
    for ch in children:
        ch.sort()
    post: list[int] = []
    anc = [0] * g.n
    desc = [0] * g.n

    def walk(v: int, anc_mask: int):
        anc[v] = anc_mask | (1 << v)
        m = 1 << v
        for c in children[v]:
            walk(c, anc[v])
            m |= desc[c]
        desc[v] = m
        post.append(v)

    for r in sorted(roots):
        walk(r, 0)
    return GeneratingForest(
        parent=tuple(parent),
        postorder=tuple(post),
        ancestors=tuple(anc),
        descendants=tuple(desc),
        depth=tuple(depth),
    )


def is_trivially_perfect(g: Graph) -> bool:
    return isinstance(build_generating_forest(g), GeneratingForest)


# ---------------------------------------------------------------------------
# Interval graphs: clique paths


@dataclass(frozen=True)
class CliquePath:
    """All maximal cliques in an order where each vertex's cliques are
    consecutive.  ``lp``/``rp`` give each vertex's first/last clique index."""

    cliques: tuple[int, ...]
    lp: tuple[int, ...]
    rp: tuple[int, ...]


@dataclass(frozen=True)
class NotIntervalWitness:
    reason: str  # "not-chordal" or "no-consecutive-arrangement"


def _arrange_consecutive(cliques: list[int]) -> list[int] | None:
    """Order the cliques so every vertex's cliques are consecutive, or None.

    Backtracking over placements.  A vertex whose block has closed may never
    reappear, which prunes hard on interval inputs: remaining[v] counts the
    unplaced cliques containing v, so an open vertex dropped by the next
    clique while remaining[v] > 0 certifies a dead branch.
    """
    k = len(cliques)
    if k <= 1:
        return list(cliques)
    remaining_init: dict[int, int] = {}
    for m in cliques:
        for v in bits(m):
            remaining_init[v] = remaining_init.get(v, 0) + 1

    order: list[int] = []

    def backtrack(placed_mask: int, open_mask: int, remaining: dict[int, int]) -> bool:
        if len(order) == k:
            return True
        for idx in range(k):
            if placed_mask >> idx & 1:
                continue
            K = cliques[idx]
            if any(remaining[v] > 0 for v in bits(open_mask & ~K)):
                continue
            new_remaining = dict(remaining)
            for v in bits(K):
                new_remaining[v] -= 1
            new_open = mask_of(v for v in bits(K) if new_remaining[v] > 0)
            order.append(idx)
            if backtrack(placed_mask | (1 << idx), new_open, new_remaining):
                return True
            order.pop()
        return False

    if backtrack(0, 0, remaining_init):
        return [cliques[i] for i in order]
    return None


@lru_cache(maxsize=None)
def build_clique_path(g: Graph):
    """Clique path of an interval graph, or a failure witness.

    Disconnected graphs get the components' clique paths concatenated in
    component order.
    """
    if not is_chordal(g):
        return NotIntervalWitness(reason="not-chordal")
    all_cliques = maximal_cliques_chordal(g)
    ordered: list[int] = []
    for comp in g.components():
        comp_cliques = [m for m in all_cliques if m & comp]
        arranged = _arrange_consecutive(comp_cliques)
        if arranged is None:
            return NotIntervalWitness(reason="no-consecutive-arrangement")
        ordered.extend(arranged)
    lp = [-1] * g.n
    rp = [-1] * g.n
    for i, m in enumerate(ordered):
        for v in bits(m):
            if lp[v] == -1:
                lp[v] = i
            rp[v] = i
    return CliquePath(cliques=tuple(ordered), lp=tuple(lp), rp=tuple(rp))


def is_interval(g: Graph) -> bool:
    return isinstance(build_clique_path(g), CliquePath)


def check_clique_path_invariant(g: Graph, cp: CliquePath) -> bool:
    """Consecutiveness re-checked per vertex (test helper)."""
    for v in range(g.n):
        idxs = [i for i, m in enumerate(cp.cliques) if m >> v & 1]
        if idxs and idxs != list(range(idxs[0], idxs[-1] + 1)):
            return False
    cover = 0
    for m in cp.cliques:
        if not g.is_clique(m):
            return False
        cover |= m
    return cover == g.full_mask or g.n == 0


# ---------------------------------------------------------------------------
# Wheels


@dataclass(frozen=True)
class WheelRoles:
    in_wheel: int   # mask: lies in some wheel
    centers: int    # mask: neighborhood contains a cycle
    rims: int       # mask: lies on a cycle inside some neighborhood


@lru_cache(maxsize=None)
def _on_cycle_vertices(g: Graph, within: int) -> int:
    """Vertices of G[within] lying on some cycle of G[within]."""
    result = 0
    for u in bits(within):
        nbrs = g.adj[u] & within
        found = False
        for w1 in bits(nbrs):
            for w2 in bits(nbrs):
                if w2 <= w1:
                    continue
                if _shortest_path(g, w1, w2, within & ~(1 << u)) is not None:
                    found = True
                    break
            if found:
                break
        if found:
            result |= 1 << u
    return result


@lru_cache(maxsize=None)
def wheel_roles(g: Graph) -> WheelRoles:
    centers = 0
    rims = 0
    for v in range(g.n):
        nv = g.adj[v]
        if not g.is_acyclic(nv):
            centers |= 1 << v
            rims |= _on_cycle_vertices(g, nv)
    return WheelRoles(in_wheel=centers | rims, centers=centers, rims=rims)


def is_wheel_free(g: Graph) -> bool:
    return all(g.is_acyclic(g.adj[v]) for v in range(g.n))


# ---------------------------------------------------------------------------
# Membership dispatch


def _is_cluster(g: Graph) -> bool:
    return all(g.is_clique(c) for c in g.components())


def _is_complete_multipartite(g: Graph, max_parts: int) -> bool:
    co = g.complement()
    comps = co.components()
    if len(comps) > max_parts:
        return False
    return all(co.is_clique(c) for c in comps)


def _free_of(g: Graph, fam: tuple[Graph, ...]) -> bool:
    return not any(contains_induced(f, g) for f in fam)


@lru_cache(maxsize=None)
def _member(cs: ClassSpec, g: Graph) -> bool:
    kind = cs.kind
    if kind == EDGELESS:
        return all(a == 0 for a in g.adj)
    if kind == CLUSTER:
        return _is_cluster(g)
    if kind == CLIQUE:
        return g.is_clique(g.full_mask)
    if kind == COMPLETE_P_PARTITE:
        return _is_complete_multipartite(g, cs.p)
    if kind == COMPLETE_BIPARTITE:
        return _is_complete_multipartite(g, 2)
    if kind in (SPLIT, COMPLETE_SPLIT, PSEUDO_SPLIT, THRESHOLD):
        return _free_of(g, _STATIC_FAMILIES[kind])
    if kind == DEGREE_BOUNDED:
        return all(bit_count(a) <= cs.d for a in g.adj)
    if kind == TRIVIALLY_PERFECT:
        return is_trivially_perfect(g)
    if kind == INTERVAL:
        return is_interval(g)
    if kind == CHORDAL:
        return is_chordal(g)
    if kind in CHORDAL_PLUS_FINITE:
        return is_chordal(g) and _free_of(g, chordal_extra_family(kind))
    if kind == WHEEL_FREE:
        return is_wheel_free(g)
    if kind == FOREST:
        return g.is_acyclic()
    if kind == FINITE_FORBIDDEN:
        return _free_of(g, cs.forbidden)
    raise DomainError(f"unknown class kind {kind!r}")


def is_in_class(cs: ClassSpec, g: Graph) -> bool:
    return _member(cs, g)


def recognize(cs: ClassSpec, g: Graph, connected_variant: bool = False) -> bool:
    """Membership test; with the flag, additionally require connectivity."""
    if connected_variant and not g.is_connected():
        return False
    return _member(cs, g)


@lru_cache(maxsize=None)
def _member_mask(cs: ClassSpec, g: Graph, mask: int) -> bool:
    return _member(cs, induce(g, mask))


def set_in_class(cs: ClassSpec, g: Graph, mask: int) -> bool:
    """Is `mask` a P set of g?  Memoized on (spec, graph, mask)."""
    if mask == 0:
        return True
    return _member_mask(cs, g, mask)


def is_solution(cs: ClassSpec, g: Graph, mask: int, variant: str) -> bool:
    """Is `mask` a maximal (connected) P set of g?"""
    from .graphs import CONNECTED

    if variant == CONNECTED:
        if mask == 0 or not g.is_connected(mask):
            return False
        if not set_in_class(cs, g, mask):
            return False
        for v in bits(g.neighbors(mask)):
            if set_in_class(cs, g, mask | (1 << v)):
                return False
        return True
    if not set_in_class(cs, g, mask):
        return False
    for v in bits(g.full_mask & ~mask):
        if set_in_class(cs, g, mask | (1 << v)):
            return False
    return True


def clear_caches():
    """Drop all memoized recognition state (test isolation helper)."""
    for fn in (
        _find_induced, _peo, find_hole, hole_vertices, chordal_certificates,
        maximal_cliques_chordal, build_generating_forest, build_clique_path,
        _on_cycle_vertices, wheel_roles, _member, _member_mask, _is_biconnected,
    ):
        fn.cache_clear()
