"""Successor function over generating trees for maximal connected induced
trivially perfect subgraphs.

Given a solution S and an outside vertex v, candidates are carved out of
S_u = S & N(u) for each neighbor u of v inside S, in four shapes: drop all
of N(v) (tp0); keep an anchor v' and drop its non-N(v) ancestors plus its
N(v) proper descendants (tp1); make v and v' true twins by dropping the
neighborhood difference (tp2); or keep two nonadjacent anchors v1, v2 and
drop the strict in-betweens of their lowest common ancestor together with
the vertices distinguishing {v1,v2} from v (tp3).  Each candidate, with u
and v added, induces a connected trivially perfect graph and is extended to
a solution.
"""

from __future__ import annotations

from .errors import PreconditionError
from .extension import extend_connected
from .graphs import CONNECTED, Graph, as_tuple, bits, induced_subgraph
from .recognition import (
    ClassSpec,
    GeneratingForest,
    TRIVIALLY_PERFECT,
    build_generating_forest,
    is_solution,
)

TP_SPEC = ClassSpec(TRIVIALLY_PERFECT)


def _tree_data(g: Graph, s_mask: int):
    """Generating tree of G[S] with ancestor/descendant masks in g's ids."""
    view = induced_subgraph(g, s_mask)
    gf = build_generating_forest(view.graph)
    if not isinstance(gf, GeneratingForest):
        raise PreconditionError("S does not induce a trivially perfect graph")
    anc = {}
    desc = {}
    depth = {}
    for local, parent_id in enumerate(view.to_parent):
        anc[parent_id] = view.to_parent_mask(gf.ancestors[local])
        desc[parent_id] = view.to_parent_mask(gf.descendants[local])
        depth[parent_id] = gf.depth[local]
    return anc, desc, depth


def tp_candidates(g: Graph, s_mask: int, v: int) -> list[tuple[int, int]]:
    """Pre-extension candidates as (u, subset-of-S_u) pairs.

    The generating tree of G[S] is rebuilt per call; u ranges over the
    neighbors of v inside S (outside vertices cannot survive into the
    extended seed anyway).
    """
    anc, desc, depth = _tree_data(g, s_mask)
    nv = g.adj[v]
    out: list[tuple[int, int]] = []
    for u in bits(nv & s_mask):
        s_u = s_mask & g.adj[u]
        s_uv = s_u & nv
        out.append((u, s_u & ~nv))  # tp0
        for vp in bits(s_uv):
            # tp1: ancestors of v' not adjacent to v; proper descendants
            # adjacent to v.
            a = anc[vp] & ~nv
            d = (desc[vp] & ~(1 << vp)) & nv
            out.append((u, s_u & ~(a | d)))
            # tp2: drop vertices distinguishing v' from v (the anchors
            # themselves are kept).
            sym = (g.adj[vp] ^ nv) & ~(1 << vp) & ~(1 << v)
            out.append((u, s_u & ~sym))
        members = list(bits(s_uv))
        for i, v1 in enumerate(members):
            for v2 in members[i + 1:]:
                if g.has_edge(v1, v2):
                    continue
                # tp3: lowest common ancestor of the nonadjacent anchors.
                common = anc[v1] & anc[v2]
                lca = max(bits(common), key=lambda x: depth[x])
                strict_between = (desc[lca] & ~(1 << lca)) & (
                    (anc[v1] | anc[v2]) & ~(1 << v1) & ~(1 << v2)
                )
                b = (g.adj[v1] | g.adj[v2]) & ~nv
                c = nv & ~(g.adj[v1] | g.adj[v2]) & ~(1 << v1) & ~(1 << v2)
                out.append((u, s_u & ~(strict_between | b | c)))
    return out


def tp_successors(g: Graph, s_mask: int, v: int, check: bool = False) -> list[int]:
    """All successor solutions of (S, v); every returned set contains v."""
    if check and not is_solution(TP_SPEC, g, s_mask, CONNECTED):
        raise PreconditionError("S is not a maximal connected trivially perfect set")
    if s_mask >> v & 1:
        raise PreconditionError("v must lie outside S")
    out: list[int] = []
    seen: set[int] = set()
    seeds_done: set[int] = set()
    for u, cand in tp_candidates(g, s_mask, v):
        seed = cand | (1 << u) | (1 << v)
        if seed in seeds_done:
            continue
        seeds_done.add(seed)
        sol = extend_connected(TP_SPEC, g, seed)
        if sol not in seen:
            seen.add(sol)
            out.append(sol)
    return out


def tp_successor_handle(check: bool = False):
    def succ(g: Graph, s_mask: int, v: int) -> list[int]:
        return tp_successors(g, s_mask, v, check=check)
    return succ
