"""Brute-force ground truth and solution-map diagnostics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import DomainError
from .graphs import CONNECTED, GENERAL, Graph, as_tuple, bit_count, bits
from .recognition import ClassSpec, set_in_class

DEFAULT_ORACLE_BOUND = 20


@lru_cache(maxsize=None)
def _brute_force(cs: ClassSpec, variant: str, g: Graph) -> tuple[int, ...]:
    members = []
    for mask in range(1, 1 << g.n):
        if variant == CONNECTED and not g.is_connected(mask):
            continue
        if set_in_class(cs, g, mask):
            members.append(mask)
    # Keep the inclusion-maximal members (pairwise filter; sizes are tiny).
    members.sort(key=bit_count, reverse=True)
    maximal: list[int] = []
    for m in members:
        if not any(m & big == m for big in maximal):
            maximal.append(m)
    maximal.sort(key=as_tuple)
    return tuple(maximal)


def brute_force_enumerate(cs: ClassSpec, variant: str, g: Graph,
                          bound: int = DEFAULT_ORACLE_BOUND) -> list[int]:
    """All maximal (connected) P sets of g by scanning all 2^n subsets.

    Refuses graphs above ``bound`` vertices to prevent accidental blowups.
    """
    if variant not in (GENERAL, CONNECTED):
        raise DomainError(f"unknown variant {variant!r}")
    if g.n > bound:
        raise DomainError(f"oracle refuses n={g.n} > bound {bound}")
    return list(_brute_force(cs, variant, g))


SuccessorFn = Callable[[Graph, int, int], list[int]]


@dataclass(frozen=True)
class MapReport:
    node_count: int
    arc_count: int
    strongly_connected: bool
    max_out_degree: int
    condensation_size: int
    sound: bool
    violation: tuple[int, int, int] | None  # (S, v, offending successor)


def solution_map_diagnostics(succ: SuccessorFn, cs: ClassSpec, variant: str,
                             g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> MapReport:
    """Build the explicit solution map over all oracle solutions and report
    its strong connectivity and degree statistics.

    Arcs go from each solution S to every member of succ(S, v), for every
    applicable v (general: v not in S; connected: v in N(S)).  A successor
    that is not an oracle solution flags a soundness violation.
    """
    solutions = brute_force_enumerate(cs, variant, g, bound=bound)
    index = {s: i for i, s in enumerate(solutions)}
    adj: list[set[int]] = [set() for _ in solutions]
    violation = None
    arc_count = 0
    for s in solutions:
        scan = g.neighbors(s) if variant == CONNECTED else g.full_mask & ~s
        for v in bits(scan):
            for t in succ(g, s, v):
                if t not in index:
                    violation = (s, v, t)
                    continue
                if t != s:
                    adj[index[s]].add(index[t])
                    arc_count += 1
    scc_count = _count_sccs(adj)
    return MapReport(
        node_count=len(solutions),
        arc_count=arc_count,
        strongly_connected=scc_count <= 1,
        max_out_degree=max((len(a) for a in adj), default=0),
        condensation_size=scc_count,
        sound=violation is None,
        violation=violation,
    )


def _count_sccs(adj: list[set[int]]) -> int:
    """Iterative Tarjan strongly-connected-components count."""
    n = len(adj)
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    sccs = 0
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, iter(adj[root]))]
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index_of[w] == -1:
                    index_of[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index_of[v]:
                sccs += 1
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    if w == v:
                        break
    return sccs
