"""Base solvers for t-restricted instances and the solver-stack builder.

A t-restricted instance (G, Z) promises that Z is contained in every
forbidden set of G.  The bases here exploit that promise: finite families
make the top level trivial, chordal-like classes funnel into minimal
separator enumeration, and wheel-free instances reduce to maximal induced
forests on cycle cores.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .errors import ContractViolation, DomainError, PreconditionError
from .extension import extend_general
from .framework import (
    RestrictedInstance,
    RestrictedSolver,
    base_solver,
    lift_restricted,
)
from .graphs import CONNECTED, GENERAL, Graph, bit_count, bits, induced_subgraph
from .oracle import brute_force_enumerate
from .recognition import (
    CHORDAL,
    CHORDAL_PLUS_FINITE,
    ClassSpec,
    FOREST,
    WHEEL_FREE,
    chordal_extra_family,
    contains_induced,
    finite_family,
    hole_vertices,
    is_chordal,
    is_in_class,
    minimal_st_separators,
    restriction_level,
    set_in_class,
    wheel_roles,
)
from .reductions import connected_solutions_from_general, not_z_solutions

ForestEnumerator = Callable[[Graph], list[int]]


def maximal_forests(g: Graph) -> list[int]:
    """All maximal induced forests.

    Default implementation is the brute-force oracle on the forest class;
    the wheel-free solver accepts any replacement with the same contract.
    """
    return brute_force_enumerate(ClassSpec(FOREST), GENERAL, g)


# ---------------------------------------------------------------------------
# Trivial base for finite forbidden families


def finite_f_restricted(fam: tuple[Graph, ...], cs: ClassSpec,
                        instance: RestrictedInstance, variant: str) -> list[int]:
    """t-restricted base at t = max order in the family.

    Any forbidden set has at most t vertices and contains Z, so the only
    possible forbidden set is Z itself: either G is in the class, or the
    non-superset catalogue is the complete answer.
    """
    g, z = instance.graph, instance.z_mask
    t = max(f.n for f in fam)
    if bit_count(z) != t:
        raise DomainError(f"finite-family base needs |Z| = {t}")
    if is_in_class(cs, g):
        return [g.full_mask] if variant == GENERAL else g.components()
    if set_in_class(cs, g, z):
        raise ContractViolation(
            "G is not in the class but Z is a P set: some forbidden set "
            "misses Z, so the instance is not t-restricted"
        )
    return not_z_solutions(cs, g, z, variant)


# ---------------------------------------------------------------------------
# 3-restricted chordal


def _chordal_structure(g: Graph, z_mask: int):
    """Components of G - Z with their attachment pairs, after checking the
    structural guarantees of a pruned 3-restricted chordal instance."""
    z = list(bits(z_mask))
    z_edges = g.edge_count(z_mask)
    comps = g.components(g.full_mask & ~z_mask)
    if len(comps) != 3 - z_edges:
        raise ContractViolation(
            f"G - Z has {len(comps)} components, expected {3 - z_edges}"
        )
    out = []
    for comp in comps:
        attach = [zi for zi in z if g.adj[zi] & comp]
        if len(attach) != 2 or g.has_edge(attach[0], attach[1]):
            raise ContractViolation(
                "a component of G - Z is not adjacent to precisely two "
                "nonadjacent vertices of Z"
            )
        out.append((comp, attach[0], attach[1]))
    return out


def chordal_restricted3(instance: RestrictedInstance, variant: str) -> list[int]:
    """3-restricted maximal induced chordal subgraphs.

    Vertices in no hole are redundant and re-attached afterwards.  On the
    pruned graph, each component of G - Z gates one nonadjacent pair of Z;
    the Z-superset solutions are exactly the complements of the minimal
    separators of those pairs inside their gate components.
    """
    g, z_mask = instance.graph, instance.z_mask
    if bit_count(z_mask) != 3:
        raise DomainError("chordal base needs |Z| = 3")
    if is_in_class(ClassSpec(CHORDAL), g):
        return [g.full_mask] if variant == GENERAL else g.components()
    general = _chordal3_general(g, z_mask)
    if variant == GENERAL:
        return general
    return connected_solutions_from_general(
        ClassSpec(CHORDAL), g, z_mask, general
    )


def _chordal3_general(g: Graph, z_mask: int) -> list[int]:
    cs = ClassSpec(CHORDAL)
    in_hole = hole_vertices(g)
    if z_mask & ~in_hole:
        raise ContractViolation("some vertex of Z lies in no hole")
    redundant = g.full_mask & ~in_hole
    view = induced_subgraph(g, in_hole)
    h = view.graph
    hz = view.to_local_mask(z_mask)
    sols = [m | (1 << z) for z in bits(hz) for m in (h.full_mask & ~(1 << z),)]
    sols = []
    for z in bits(hz):
        sols.append(h.full_mask & ~(1 << z))
    for comp, zi, zj in _chordal_structure(h, hz):
        gate = comp | (1 << zi) | (1 << zj)
        gate_view = induced_subgraph(h, gate)
        if not is_chordal(gate_view.graph):
            raise ContractViolation("a gate component is not chordal")
        seps = minimal_st_separators(
            gate_view.graph, gate_view.to_local(zi), gate_view.to_local(zj)
        )
        for sep in seps:
            sols.append(h.full_mask & ~gate_view.to_parent_mask(sep))
    seen = set()
    out = []
    for s in sols:
        full = view.to_parent_mask(s) | redundant
        if full not in seen:
            seen.add(full)
            out.append(full)
    return out


# ---------------------------------------------------------------------------
# Chordal-plus-finite classes (unit interval, block, leaf powers)


def chordal_like_restricted(cs: ClassSpec, instance: RestrictedInstance,
                            variant: str) -> list[int]:
    """Base solver for classes forbidding holes plus a finite family.

    At restriction level t = the family's maximum order, forbidden graphs
    smaller than t cannot contain Z, so they do not occur; an order-t member
    must sit exactly on Z and is then the unique forbidden set.  Otherwise
    every forbidden subgraph is a hole and the chordal machinery applies to
    any 3-subset of Z.
    """
    if cs.kind not in CHORDAL_PLUS_FINITE:
        raise DomainError(f"{cs} is not a chordal-plus-finite class")
    fam = chordal_extra_family(cs.kind)
    t = max(f.n for f in fam)
    g, z_mask = instance.graph, instance.z_mask
    if bit_count(z_mask) != t:
        raise DomainError(f"{cs.kind} base needs |Z| = {t}")
    if is_in_class(cs, g):
        return [g.full_mask] if variant == GENERAL else g.components()
    z_graph = induced_subgraph(g, z_mask).graph
    if any(f.n == t and contains_induced(f, z_graph) for f in fam):
        # Z is the unique forbidden set.
        return not_z_solutions(cs, g, z_mask, variant)
    for f in fam:
        if contains_induced(f, g):
            raise ContractViolation(
                "a finite forbidden graph occurs off Z; instance is not "
                "t-restricted"
            )
    # All forbidden subgraphs of G are holes, so the maximal P sets of G
    # coincide with its maximal chordal sets.
    z3 = 0
    for z in list(bits(z_mask))[:3]:
        z3 |= 1 << z
    general = _chordal3_general_or_whole(g, z3)
    if variant == GENERAL:
        return general
    # Holes are biconnected, and the finite forbidden graphs were ruled out.
    return connected_solutions_from_general(
        ClassSpec(CHORDAL), g, z3, general, biconnected_ok=True
    )


def _chordal3_general_or_whole(g: Graph, z3: int) -> list[int]:
    if is_chordal(g):
        return [g.full_mask]
    return _chordal3_general(g, z3)


# ---------------------------------------------------------------------------
# 5-restricted wheel-free


def wheel_free_restricted5(instance: RestrictedInstance, variant: str,
                           forests: ForestEnumerator = maximal_forests) -> list[int]:
    """5-restricted maximal induced wheel-free subgraphs, polynomial total.

    Vertices in no wheel are redundant.  If some z of Z dominates the rest
    of Z it centers every wheel and the problem is maximal forests of G - z;
    otherwise centers and rim vertices partition the graph and a search tree
    seeded with the rim side B explores, per missing center c, the maximal
    forests of the cycle core of S & N(c).
    """
    cs = ClassSpec(WHEEL_FREE)
    g, z_mask = instance.graph, instance.z_mask
    if bit_count(z_mask) != 5:
        raise DomainError("wheel-free base needs |Z| = 5")
    if is_in_class(cs, g):
        return [g.full_mask] if variant == GENERAL else g.components()
    general = _wheel_free5_general(g, z_mask, forests)
    if variant == GENERAL:
        return general
    # Wheels are biconnected.
    return connected_solutions_from_general(cs, g, z_mask, general)


def _wheel_free5_general(g: Graph, z_mask: int,
                         forests: ForestEnumerator) -> list[int]:
    cs = ClassSpec(WHEEL_FREE)
    roles = wheel_roles(g)
    if z_mask & ~roles.in_wheel:
        raise ContractViolation("some vertex of Z lies in no wheel")
    redundant = g.full_mask & ~roles.in_wheel
    view = induced_subgraph(g, roles.in_wheel)
    h = view.graph
    hz = view.to_local_mask(z_mask)
    local = _wheel_free5_pruned(h, hz, forests)
    return [view.to_parent_mask(m) | redundant for m in local]


def _wheel_free5_pruned(g: Graph, z_mask: int,
                        forests: ForestEnumerator) -> list[int]:
    cs = ClassSpec(WHEEL_FREE)
    full = g.full_mask
    z = list(bits(z_mask))
    dominating = [u for u in z if g.adj[u] & z_mask == z_mask & ~(1 << u)]
    if dominating:
        u = dominating[0]
        bu = 1 << u
        view = induced_subgraph(g, full & ~bu)
        out = [full & ~bu]
        for f in forests(view.graph):
            out.append(view.to_parent_mask(f) | bu)
        return out
    roles = wheel_roles(g)
    a_side = roles.centers
    b_side = roles.rims
    if a_side & b_side or (a_side | b_side) != full:
        raise ContractViolation(
            "center/rim roles do not partition the pruned graph"
        )
    if z_mask & ~b_side:
        raise ContractViolation("Z is not contained in the rim side")
    seen = {b_side}
    queue = [b_side]
    out = [b_side]
    while queue:
        s = queue.pop(0)
        for c in bits(a_side & ~s):
            bc = 1 << c
            core_within = s & g.adj[c]
            b_prime = _cycle_core(g, core_within)
            keep = (s & b_side) & ~b_prime
            if b_prime:
                core_view = induced_subgraph(g, b_prime)
                forest_sets = [core_view.to_parent_mask(f)
                               for f in forests(core_view.graph)]
            else:
                forest_sets = [0]
            for f in forest_sets:
                seed = f | keep | bc
                t = extend_general(cs, g, seed)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
                    out.append(t)
    return out


def _cycle_core(g: Graph, within: int) -> int:
    from .recognition import _on_cycle_vertices

    return _on_cycle_vertices(g, within)


# ---------------------------------------------------------------------------
# Stack construction


@lru_cache(maxsize=None)
def make_stack(cs: ClassSpec, variant: str) -> RestrictedSolver:
    """Level-0 restricted solver for the class: the appropriate base lifted
    all the way down.  Cached per (class, variant) so solver memoization
    accumulates across calls."""
    base = make_base_solver(cs, variant)
    solver = base
    while solver.level > 0:
        solver = lift_restricted(solver, cs, variant)
    return solver


@lru_cache(maxsize=None)
def make_base_solver(cs: ClassSpec, variant: str) -> RestrictedSolver:
    fam = finite_family(cs)
    if fam is not None:
        t = max(f.n for f in fam)

        def fn(inst: RestrictedInstance, _fam=fam) -> list[int]:
            return finite_f_restricted(_fam, cs, inst, variant)

        return base_solver(t, cs, variant, fn, name=f"finite-base[{cs.kind}]")
    if cs.kind == CHORDAL:
        return base_solver(
            3, cs, variant,
            lambda inst: chordal_restricted3(inst, variant),
            name="chordal-3",
        )
    if cs.kind in CHORDAL_PLUS_FINITE:
        t = restriction_level(cs)

        def fn2(inst: RestrictedInstance) -> list[int]:
            return chordal_like_restricted(cs, inst, variant)

        return base_solver(t, cs, variant, fn2, name=f"chordal-like[{cs.kind}]")
    if cs.kind == WHEEL_FREE:
        return base_solver(
            5, cs, variant,
            lambda inst: wheel_free_restricted5(inst, variant),
            name="wheel-free-5",
        )
    raise DomainError(f"{cs} has no restricted base solver")
