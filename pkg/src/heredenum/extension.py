"""Greedy maximal extension of (connected) P sets.

Hereditary classes make single-pass extension sound: once S + v fails the
membership test, so does S' + v for every superset S', so each vertex is
tried at most once.  Vertices are tried in ascending id order, which pins
the deterministic output contract used across the package.
"""

from __future__ import annotations

from .errors import PreconditionError
from .graphs import CONNECTED, GENERAL, Graph, bits, lowest_bit
from .recognition import ClassSpec, set_in_class


def extend(cs: ClassSpec, variant: str, g: Graph, s: int) -> int:
    if variant == CONNECTED:
        return extend_connected(cs, g, s)
    return extend_general(cs, g, s)


def extend_general(cs: ClassSpec, g: Graph, s: int) -> int:
    if not set_in_class(cs, g, s):
        raise PreconditionError("seed is not a P set")
    cur = s
    for v in range(g.n):
        b = 1 << v
        if cur & b:
            continue
        if set_in_class(cs, g, cur | b):
            cur |= b
    return cur


def extend_connected(cs: ClassSpec, g: Graph, s: int) -> int:
    """Connected extension: only current neighbors of the growing set are
    tried, each vertex at most once."""
    if s == 0 or not g.is_connected(s):
        raise PreconditionError("seed is not a nonempty connected set")
    if not set_in_class(cs, g, s):
        raise PreconditionError("seed is not a P set")
    cur = s
    tried = 0
    while True:
        cand = g.neighbors(cur) & ~tried
        if not cand:
            return cur
        v = lowest_bit(cand)
        b = 1 << v
        tried |= b
        if set_in_class(cs, g, cur | b):
            cur |= b


def is_maximal_general(cs: ClassSpec, g: Graph, s: int) -> bool:
    return not any(
        set_in_class(cs, g, s | (1 << v)) for v in bits(g.full_mask & ~s)
    )


def is_maximal_connected(cs: ClassSpec, g: Graph, s: int) -> bool:
    return not any(set_in_class(cs, g, s | (1 << v)) for v in bits(g.neighbors(s)))


def connected_solutions_from_all_general(cs: ClassSpec, g: Graph,
                                         general_solutions: list[int]) -> list[int]:
    """Maximal connected P sets derived from all maximal P sets.

    Every maximal connected P set is a component of some maximal P set (its
    general extension cannot touch its neighborhood), so taking components
    and filtering for maximality is complete.
    """
    out: list[int] = []
    seen: set[int] = set()
    for t in general_solutions:
        for comp in g.components(t):
            if comp in seen:
                continue
            seen.add(comp)
            if is_maximal_connected(cs, g, comp):
                out.append(comp)
    out.sort(key=lambda m: tuple(bits(m)))
    return out
