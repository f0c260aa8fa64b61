"""Polynomial-time input-restricted (1-restricted) enumerators for the CKS
classes, and their lifting to polynomial-delay enumeration.

Each enumerator receives (G, v) with G - v a maximal P set of G and returns
every maximal P set of G.  Candidates generated by the case analyses are
re-filtered through recognition and maximality instead of being trusted.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import DomainError, PreconditionError
from .extension import (
    connected_solutions_from_all_general,
    is_maximal_general,
)
from .framework import (
    EnumerationStats,
    Enumerator,
    RestrictedInstance,
    RestrictedSolver,
    base_solver,
    lift_iter_streaming,
)
from .graphs import (
    CONNECTED,
    Graph,
    bit_count,
    bits,
    induced_subgraph,
    lowest_bit,
    mask_of,
)
from .recognition import (
    CLIQUE,
    CLUSTER,
    ClassSpec,
    DEGREE_BOUNDED,
    EDGELESS,
    PSEUDO_SPLIT,
    SPLIT,
    contains_induced,
    set_in_class,
)
from . import families


def _require_input_restricted(cs: ClassSpec, g: Graph, v: int):
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    rest = g.full_mask & ~(1 << v)
    if not set_in_class(cs, g, rest):
        raise PreconditionError("G - v is not a P set")
    if not is_maximal_general(cs, g, rest):
        raise PreconditionError("G - v is not a maximal P set")


def _filter_candidates(cs: ClassSpec, g: Graph, candidates: list[int]) -> list[int]:
    """Keep candidates that are P sets and inclusion-maximal members."""
    kept = []
    seen = set()
    for c in candidates:
        if c and c not in seen and set_in_class(cs, g, c):
            seen.add(c)
            kept.append(c)
    out = [c for c in kept if is_maximal_general(cs, g, c)]
    # Maximality against the whole graph also removes nested candidates.
    final = []
    for c in out:
        if not any(c != o and c & o == c for o in out):
            final.append(c)
    return final


def edgeless_restricted(g: Graph, v: int) -> list[int]:
    """G - v a maximal independent set: the only other candidate is V - N(v)."""
    cs = ClassSpec(EDGELESS)
    _require_input_restricted(cs, g, v)
    full = g.full_mask
    return _filter_candidates(cs, g, [full & ~(1 << v), full & ~g.adj[v]])


def clique_restricted(g: Graph, v: int) -> list[int]:
    """G - v a maximal clique: the candidates are V - v and N[v]."""
    cs = ClassSpec(CLIQUE)
    _require_input_restricted(cs, g, v)
    full = g.full_mask
    return _filter_candidates(cs, g, [full & ~(1 << v), g.adj[v] | (1 << v)])


def cluster_restricted(g: Graph, v: int) -> list[int]:
    """G - v a maximal cluster set; at most n + 1 solutions.

    v either joins one clique component K of G - v, deleting the K-vertices
    it misses and its neighbors outside K, or forms a clique by itself,
    deleting its whole neighborhood.
    """
    cs = ClassSpec(CLUSTER)
    _require_input_restricted(cs, g, v)
    full = g.full_mask
    b = 1 << v
    nv = g.adj[v]
    cands = [full & ~b]
    for k in g.components(full & ~b):
        cands.append(full & ~((k & ~nv) | (nv & ~k)))
    cands.append(full & ~nv)
    return _filter_candidates(cs, g, cands)


def _split_partition(g: Graph, within: int) -> tuple[int, int]:
    """Split partition of G[within] whose clique side is a maximal clique of
    G[within]; the canonically first such clique is used."""
    for clique in g.maximal_cliques(within):
        if g.is_independent(within & ~clique):
            return clique, within & ~clique
    raise PreconditionError("vertex set admits no split partition")


def split_restricted(g: Graph, v: int) -> list[int]:
    """G - v a maximal split set; O(n^2) solutions via the four-case
    analysis over the clique side of a new solution's split partition."""
    cs = ClassSpec(SPLIT)
    _require_input_restricted(cs, g, v)
    return _filter_candidates(cs, g, _split_style_candidates(cs, g, v))


def _split_style_candidates(cs: ClassSpec, g: Graph, v: int) -> list[int]:
    full = g.full_mask
    b = 1 << v
    nv = g.adj[v]
    c_side, i_side = _split_partition(g, full & ~b)
    cands = [full & ~b]
    # Case 1: clique side unchanged.
    cands.append(c_side | (i_side & ~nv) | b)
    # Case 2: clique side (N(v) & C) + v.
    c2 = (nv & c_side) | b
    cands.append(c2 | i_side)
    for u in bits(c_side & ~c2):
        cands.append(c2 | (i_side & ~g.adj[u]) | (1 << u))
    # Case 3: clique side (N(v) & N(u) & C) + v + u for u in I & N(v).
    for u in bits(i_side & nv):
        bu = 1 << u
        c3 = (nv & g.adj[u] & c_side) | b | bu
        cands.append(c3 | (i_side & ~bu))
        for w in bits(c_side & ~c3):
            cands.append(c3 | ((i_side & ~(g.adj[w] | bu)) | (1 << w)))
    # Case 4: clique side (N(u) & C) + u for u in I; v moves to the
    # independent side.
    for u in bits(i_side):
        bu = 1 << u
        c4 = (g.adj[u] & c_side) | bu
        cands.append(c4 | b | (i_side & ~bu & ~nv))
        for w in bits(c_side & ~g.adj[u] & ~nv):
            bw = 1 << w
            i4 = (b | bw | i_side) & ~(g.adj[w] | nv) | b | bw
            cands.append(c4 | (i4 & ~bu))
    return cands


def pseudo_split_restricted(g: Graph, v: int) -> list[int]:
    """G - v a maximal pseudo-split set; O(n^4) solutions.

    Pentagon-free rest reduces to the split cases plus pentagons through v
    completed from two clique and two independent vertices; otherwise the
    unique pentagon S of G - v is handled per vertex (solutions avoiding
    some x of S come from the pentagon-free analysis of G - x) plus the two
    solutions keeping S whole.
    """
    cs = ClassSpec(PSEUDO_SPLIT)
    _require_input_restricted(cs, g, v)
    return _filter_candidates(cs, g, _pseudo_split_candidates(cs, g, v))


def _pseudo_split_partition(g: Graph, within: int) -> tuple[int, int, int]:
    """(C, S, I) partition of pseudo-split G[within]; S empty or a pentagon."""
    pent = _find_pentagon(g, within)
    if pent is None:
        c_side, i_side = _split_partition(g, within)
        return c_side, 0, i_side
    c_side = 0
    for x in bits(within & ~pent):
        if g.adj[x] & pent == pent:
            c_side |= 1 << x
    i_side = within & ~pent & ~c_side
    if not (g.is_clique(c_side) and g.is_independent(i_side)):
        raise PreconditionError("vertex set is not pseudo-split")
    for x in bits(i_side):
        if g.adj[x] & pent:
            raise PreconditionError("vertex set is not pseudo-split")
    return c_side, pent, i_side


def _find_pentagon(g: Graph, within: int) -> int | None:
    view = induced_subgraph(g, within)
    witness = contains_induced(families.C5, view.graph, return_witness=True)
    if witness is None:
        return None
    return view.to_parent_mask(witness)


def _pseudo_split_candidates(cs: ClassSpec, g: Graph, v: int) -> list[int]:
    full = g.full_mask
    b = 1 << v
    rest = full & ~b
    pent = _find_pentagon(g, rest)
    cands = [rest]
    if pent is None:
        c_side, _, i_side = _pseudo_split_partition(g, rest)
        cands.extend(_split_style_candidates(cs, g, v))
        # Pentagons through v: two clique vertices and two independent ones.
        for c1, c2 in combinations(list(bits(c_side)), 2):
            for i1, i2 in combinations(list(bits(i_side)), 2):
                s_new = b | (1 << c1) | (1 << c2) | (1 << i1) | (1 << i2)
                if not _is_pentagon(g, s_new):
                    continue
                keep_c = _common_neighbors(g, s_new, c_side & ~s_new)
                keep_i = i_side & ~s_new & ~g.neighbors(s_new)
                cands.append(s_new | keep_c | keep_i)
        return cands
    # The rest holds its unique pentagon S: keep S whole (v joins the clique
    # side when complete to S, the independent side when anti-complete), and
    # recurse into the pentagon-free graph G - x for each x in S.
    c_side, s_side, i_side = _pseudo_split_partition(g, rest)
    if g.adj[v] & s_side == s_side:
        cands.append(s_side | (c_side & g.adj[v]) | b | i_side)
    if not g.adj[v] & s_side:
        cands.append(s_side | c_side | (i_side & ~g.adj[v]) | b)
    for x in bits(s_side):
        view = induced_subgraph(g, full & ~(1 << x))
        local = _pseudo_split_candidates(cs, view.graph, view.to_local(v))
        cands.extend(view.to_parent_mask(m) for m in local)
    return cands


def _is_pentagon(g: Graph, mask: int) -> bool:
    if bit_count(mask) != 5:
        return False
    return all(bit_count(g.adj[u] & mask) == 2 for u in bits(mask))


def _common_neighbors(g: Graph, targets: int, within: int) -> int:
    out = 0
    for x in bits(within):
        if g.adj[x] & targets == targets:
            out |= 1 << x
    return out


def degree_restricted(d: int, g: Graph, v: int) -> list[int]:
    """G - v of maximum degree <= d; O(d^{2d} n^d) solutions.

    For each retained neighborhood D of v (any subset of N(v) of size <= d),
    start from V minus the dropped neighbors and resolve each overloaded
    vertex of D by branching over which of its other neighbors to delete.
    """
    if d < 0:
        raise DomainError("d must be >= 0")
    cs = ClassSpec(DEGREE_BOUNDED, d=d)
    _require_input_restricted(cs, g, v)
    full = g.full_mask
    b = 1 << v
    nv = list(bits(g.adj[v]))
    cands = [full & ~b]
    seen_bases = set()
    for size in range(min(d, len(nv)) + 1):
        for dset in combinations(nv, size):
            dmask = mask_of(dset)
            base = full & ~(g.adj[v] & ~dmask)
            if base in seen_bases:
                continue
            seen_bases.add(base)
            stack = [base]
            seen_local = set()
            while stack:
                cur = stack.pop()
                if cur in seen_local:
                    continue
                seen_local.add(cur)
                overloaded = [
                    u for u in dset
                    if cur >> u & 1 and bit_count(g.adj[u] & cur) > d
                ]
                if not overloaded:
                    cands.append(cur)
                    continue
                u = overloaded[0]
                for w in bits(g.adj[u] & cur & ~dmask & ~b):
                    stack.append(cur & ~(1 << w))
    return _filter_candidates(cs, g, cands)


# ---------------------------------------------------------------------------
# Lifting per Cohen et al.: polynomial delay from the 1-restricted base


InputRestrictedFn = "Callable[[Graph, int], list[int]]"


def _base_by_kind(cs: ClassSpec):
    if cs.kind == EDGELESS:
        return edgeless_restricted
    if cs.kind == CLIQUE:
        return clique_restricted
    if cs.kind == CLUSTER:
        return cluster_restricted
    if cs.kind == SPLIT:
        return split_restricted
    if cs.kind == PSEUDO_SPLIT:
        return pseudo_split_restricted
    if cs.kind == DEGREE_BOUNDED:
        return lambda g, v: degree_restricted(cs.d, g, v)
    return None


@lru_cache(maxsize=None)
def input_restricted_solver(cs: ClassSpec, variant: str) -> RestrictedSolver:
    """Level-1 restricted solver backed by the class's input-restricted
    enumerator; connected solutions are derived from the general ones."""
    base = _base_by_kind(cs)
    if base is None:
        raise DomainError(f"{cs} has no dedicated input-restricted enumerator")

    def fn(inst: RestrictedInstance) -> list[int]:
        v = lowest_bit(inst.z_mask)
        general = base(inst.graph, v)
        if variant == CONNECTED:
            return connected_solutions_from_all_general(cs, inst.graph, general)
        return general

    return base_solver(1, cs, variant, fn, name=f"input-restricted[{cs.kind}]")


def cohen_lift(base: RestrictedSolver, cs: ClassSpec, variant: str, g: Graph,
               limit: int | None = None) -> Enumerator:
    """Polynomial-delay enumeration from a polynomial-time input-restricted
    solver: the t=0 specialization of the restricted lifting, traversed with
    delay bookkeeping."""
    if base.level != 1:
        raise DomainError("cohen_lift expects a level-1 solver")
    stats = EnumerationStats()
    it = lift_iter_streaming(base, cs, variant, g, 0, stats)
    return Enumerator(cs, variant, g, it, mode_used="delay", limit=limit, stats=stats)
