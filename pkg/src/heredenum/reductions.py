"""Transformations between the general and connected variations, plus the
catalogue of restricted-instance solutions that avoid the special set Z."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigurationError, ContractViolation, PreconditionError
from .extension import is_maximal_connected
from .graphs import CONNECTED, GENERAL, Graph, bit_count, bits
from .recognition import ClassSpec, closed_under_universal, is_in_class, set_in_class


@dataclass(frozen=True)
class GadgetMapping:
    """Vertex bookkeeping for a graph transformation."""

    original: Graph
    transformed: Graph
    added: int  # mask of new vertices, in transformed ids

    def strip(self, solution: int) -> int:
        return solution & ~self.added


def universalize(g: Graph, cs: ClassSpec | None = None) -> tuple[Graph, int]:
    """Add a universal vertex; maps maximal P sets of G bijectively onto the
    maximal connected P sets of the result (each gains the new vertex).

    Requires the class to be closed under adding universal vertices.
    """
    if cs is not None and not closed_under_universal(cs):
        raise ConfigurationError(
            f"{cs} is not closed under adding universal vertices"
        )
    return g.add_universal_vertex(), g.n


def wheel_free_gadget(g: Graph) -> GadgetMapping:
    """Per original vertex v, add a pendant v' on v; one extra vertex u is
    adjacent to all the pendants.  The new vertices lie in no wheel, so every
    maximal wheel-free set of the result contains all of them and is
    connected; stripping them bijects onto the maximal wheel-free sets of G.
    """
    n = g.n
    u = 2 * n
    edges = list(g.edges())
    for v in range(n):
        edges.append((v, n + v))
        edges.append((n + v, u))
    transformed = Graph(2 * n + 1, edges)
    added = ((1 << (n + 1)) - 1) << n
    return GadgetMapping(original=g, transformed=transformed, added=added)


def degree_tree_gadget(d: int, g: Graph) -> GadgetMapping:
    """Binary tree with n leaves, each leaf pendant on a distinct vertex of G.

    Maps the maximal d-degree-bounded sets of G bijectively onto the maximal
    connected (d+1)-degree-bounded sets of the result that contain the whole
    tree (the transformed graph may have further solutions that saturate a
    G-vertex's degree budget and exclude its leaf).
    """
    if d < 2:
        raise ConfigurationError("degree tree gadget needs d >= 2")
    n = g.n
    edges = list(g.edges())
    if n == 0:
        return GadgetMapping(original=g, transformed=g, added=0)
    # Leaves n..2n-1; internal nodes allocated above them on demand.
    leaves = list(range(n, 2 * n))
    for v in range(n):
        edges.append((v, n + v))
    next_id = 2 * n
    level = leaves
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            edges.append((level[i], next_id))
            edges.append((level[i + 1], next_id))
            nxt.append(next_id)
            next_id += 1
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    transformed = Graph(next_id, edges)
    added = ((1 << (next_id - n)) - 1) << n
    return GadgetMapping(original=g, transformed=transformed, added=added)


def not_z_solutions(cs: ClassSpec, g: Graph, z_mask: int, variant: str) -> list[int]:
    """The maximal (connected) P sets that do not contain all of Z.

    There are at most |Z| of them in the general variation and at most |Z|n
    in the connected one.  If G is in the class, the complete solution set
    ({V} resp. the components) is returned.
    """
    if bit_count(z_mask) < 1:
        raise PreconditionError("Z must be nonempty")
    if is_in_class(cs, g):
        if variant == GENERAL:
            return [g.full_mask]
        return g.components()
    if variant == GENERAL:
        out = []
        for z in bits(z_mask):
            s = g.full_mask & ~(1 << z)
            if not set_in_class(cs, g, s):
                raise PreconditionError(
                    f"V minus vertex {z} is not a P set: Z is not contained "
                    "in every forbidden set"
                )
            out.append(s)
        return out
    out = []
    seen = set()
    for z in bits(z_mask):
        for comp in g.components(g.full_mask & ~(1 << z)):
            if comp in seen:
                continue
            seen.add(comp)
            if not set_in_class(cs, g, comp):
                raise PreconditionError(
                    f"a component of G - {z} is not a P set: Z is not "
                    "contained in every forbidden set"
                )
            if is_maximal_connected(cs, g, comp):
                out.append(comp)
    out.sort(key=lambda m: tuple(bits(m)))
    return out


def connected_solutions_from_general(cs: ClassSpec, g: Graph, z_mask: int,
                                     general_solutions: list[int],
                                     biconnected_ok: bool = False) -> list[int]:
    """Connected-variation solutions of a restricted instance, derived from
    the general ones.

    Valid when every live forbidden set is biconnected (true when the class
    declares a biconnectivity threshold c <= |Z|, or when the caller has
    already ruled the small non-biconnected forbidden graphs out and passes
    ``biconnected_ok``).  Each general solution T containing Z maps to the
    component of G[T] holding Z; solutions avoiding Z come from the
    not-Z catalogue.
    """
    from .recognition import biconnectivity_threshold

    if not biconnected_ok:
        c = biconnectivity_threshold(cs)
        if c is None or bit_count(z_mask) < c:
            raise ConfigurationError(
                f"{cs}: biconnectivity condition not declared for |Z|="
                f"{bit_count(z_mask)}"
            )
    if is_in_class(cs, g):
        return g.components()
    out = not_z_solutions(cs, g, z_mask, CONNECTED)
    seen = set(out)
    for t in general_solutions:
        if t & z_mask != z_mask:
            continue
        comps = g.components(t)
        holding = [c for c in comps if c & z_mask]
        if len(holding) != 1:
            raise ContractViolation(
                "vertices of Z split across components of a general solution"
            )
        s = holding[0]
        if s not in seen:
            seen.add(s)
            out.append(s)
    out.sort(key=lambda m: tuple(bits(m)))
    return out
