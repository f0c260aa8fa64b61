"""Successor function over clique paths for maximal connected induced
interval subgraphs.

A clique path K_1..K_l of G[S] is framed by empty sentinel cliques K_0 and
K_{l+1}.  Inserting an outside vertex v between positions a and b means
deleting, from S, the vertices that would block v's clique interval there:

  succ1 (b = a+1): K_a & K_{a+1} - N(v), and N(v) - (K_a | K_{a+1});
  succ2 (a < b-1): K_a & K_b - N(v); N(v) - K_a; the strict in-betweens
                   outside K_a | K_b; and (K_b - K_a) & N(K_a - K_b);
  succ3 (a < b-1): mirror of succ2 with the roles of K_a and K_b swapped.

succ2 with a = 0 and succ3 with b = l+1 would delete every neighbor of v
and collapse to the extension of {v}; skipping those two degenerate edges
of the index range leaves exactly l+1 + l(l-1) candidates.  The component
of the candidate containing v is extended to a solution.
"""

from __future__ import annotations

from .errors import PreconditionError
from .extension import extend_connected
from .graphs import CONNECTED, Graph, bits, induced_subgraph
from .recognition import (
    ClassSpec,
    CliquePath,
    INTERVAL,
    build_clique_path,
    is_solution,
)

INTERVAL_SPEC = ClassSpec(INTERVAL)


def _clique_path_with_sentinels(g: Graph, s_mask: int) -> list[int]:
    view = induced_subgraph(g, s_mask)
    cp = build_clique_path(view.graph)
    if not isinstance(cp, CliquePath):
        raise PreconditionError("S does not induce an interval graph")
    return [0] + [view.to_parent_mask(m) for m in cp.cliques] + [0]


def interval_candidates(g: Graph, s_mask: int, v: int) -> list[int]:
    """Pre-extension candidate subsets of S; exactly l+1 + l(l-1) of them."""
    ks = _clique_path_with_sentinels(g, s_mask)
    ell = len(ks) - 2
    nv = g.adj[v] & s_mask
    out: list[int] = []
    for a in range(ell + 1):
        ka, kb = ks[a], ks[a + 1]
        removal = (ka & kb & ~nv) | (nv & ~(ka | kb))
        out.append(s_mask & ~removal)
    # Prefix unions for the strict in-between cliques.
    prefix = [0] * (len(ks) + 1)
    for i, k in enumerate(ks):
        prefix[i + 1] = prefix[i] | k
    for a in range(ell + 1):
        for b in range(a + 2, ell + 2):
            ka, kb = ks[a], ks[b]
            mid = 0
            for j in range(a + 1, b):
                mid |= ks[j]
            shared = ka & kb & ~nv
            between = mid & ~(ka | kb)
            if a >= 1:
                blockers = (kb & ~ka) & g.neighbors(ka & ~kb)
                removal = shared | (nv & ~ka) | between | blockers
                out.append(s_mask & ~removal)
            if b <= ell:
                blockers = (ka & ~kb) & g.neighbors(kb & ~ka)
                removal = shared | (nv & ~kb) | between | blockers
                out.append(s_mask & ~removal)
    return out


def interval_successors(g: Graph, s_mask: int, v: int, check: bool = False) -> list[int]:
    """All successor solutions of (S, v); every returned set contains v."""
    if check and not is_solution(INTERVAL_SPEC, g, s_mask, CONNECTED):
        raise PreconditionError("S is not a maximal connected interval set")
    if s_mask >> v & 1:
        raise PreconditionError("v must lie outside S")
    out: list[int] = []
    seen: set[int] = set()
    comps_done: set[int] = set()
    for cand in interval_candidates(g, s_mask, v):
        comp = g.component_of(v, cand | (1 << v))
        if comp in comps_done:
            continue
        comps_done.add(comp)
        sol = extend_connected(INTERVAL_SPEC, g, comp)
        if sol not in seen:
            seen.add(sol)
            out.append(sol)
    return out


def interval_successor_handle(check: bool = False):
    def succ(g: Graph, s_mask: int, v: int) -> list[int]:
        return interval_successors(g, s_mask, v, check=check)
    return succ
