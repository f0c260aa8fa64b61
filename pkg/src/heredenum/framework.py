"""Generic enumeration machinery: solution-map traversal, the t-restricted
lifting combinator, and the total-time-to-incremental NEXT wrapper."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import ConfigurationError, ContractViolation, DomainError, PreconditionError
from .extension import extend, extend_connected, extend_general, is_maximal_general
from .graphs import (
    CONNECTED,
    GENERAL,
    Graph,
    as_tuple,
    bit_count,
    bits,
    induced_subgraph,
    lowest_bit,
)
from .recognition import ClassSpec, is_in_class, is_solution, set_in_class
from .reductions import not_z_solutions

COMPLETED = object()

SuccessorFn = Callable[[Graph, int, int], list[int]]
BudgetFn = Callable[[int, int], int]


def default_budget(n: int, k: int) -> int:
    """Default budget polynomial p(n, k); honest for the emission step model
    (p(n, k) >= k)."""
    return (n + 1) * (k + 1)


@dataclass
class EnumerationStats:
    """Delay accounting in abstract steps (successor evaluations, extensions
    and solver calls) and wall-clock seconds."""

    count: int = 0
    steps: int = 0
    max_delay_steps: int = 0
    mean_delay_steps: float = 0.0
    wall_time: float = 0.0
    _last_emit_steps: int = field(default=0, repr=False)

    def bump(self, steps: int = 1):
        self.steps += steps

    def record_emission(self):
        delay = self.steps - self._last_emit_steps
        self.count += 1
        self.max_delay_steps = max(self.max_delay_steps, delay)
        self.mean_delay_steps += (delay - self.mean_delay_steps) / self.count
        self._last_emit_steps = self.steps


class Enumerator:
    """Single-consumer pull stream of distinct solutions.

    Yields canonical ascending vertex tuples; delay statistics accumulate in
    ``stats`` as solutions are pulled.
    """

    def __init__(self, cs: ClassSpec, variant: str, graph: Graph,
                 source: Iterator[int], mode_used: str,
                 limit: int | None = None, stats: EnumerationStats | None = None):
        if limit is not None and limit < 1:
            raise DomainError("limit must be >= 1")
        self.spec = cs
        self.variant = variant
        self.graph = graph
        self.mode_used = mode_used
        self.stats = stats if stats is not None else EnumerationStats()
        self._source = source
        self._limit = limit
        self._emitted: set[int] = set()
        self._start = time.perf_counter()

    def __iter__(self):
        return self

    def __next__(self) -> tuple[int, ...]:
        if self._limit is not None and self.stats.count >= self._limit:
            raise StopIteration
        for mask in self._source:
            if mask in self._emitted:
                raise ContractViolation(
                    f"solution {as_tuple(mask)} emitted twice"
                )
            self._emitted.add(mask)
            self.stats.record_emission()
            self.stats.wall_time = time.perf_counter() - self._start
            return as_tuple(mask)
        self.stats.wall_time = time.perf_counter() - self._start
        raise StopIteration

    def solutions(self) -> list[tuple[int, ...]]:
        return list(self)

    def solution_masks(self) -> list[int]:
        from .graphs import mask_of

        return [mask_of(t) for t in self]


# ---------------------------------------------------------------------------
# Solution-map traversal


def traverse_iter(cs: ClassSpec, variant: str, g: Graph, succ: SuccessorFn,
                  seeds: list[int], stats: EnumerationStats | None = None,
                  check: bool = False) -> Iterator[int]:
    """Breadth-first traversal of the solution map implied by ``succ``.

    Emits the seeds, then repeatedly pops an unexpanded solution S and
    inserts all unseen members of succ(S, v) for each scan vertex v
    (general: v outside S; connected: v in N(S)).
    """
    seen: set[int] = set()
    queue: deque[int] = deque()
    for s in seeds:
        if s not in seen:
            if check and not is_solution(cs, g, s, variant):
                raise ContractViolation(f"seed {as_tuple(s)} is not a solution")
            seen.add(s)
            queue.append(s)
            yield s
    while queue:
        s = queue.popleft()
        scan = g.neighbors(s) if variant == CONNECTED else g.full_mask & ~s
        for v in bits(scan):
            if stats is not None:
                stats.bump()
            for t in succ(g, s, v):
                if check and not is_solution(cs, g, t, variant):
                    raise ContractViolation(
                        f"successor {as_tuple(t)} of ({as_tuple(s)}, {v}) "
                        "is not a solution"
                    )
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
                    yield t


def traverse(cs: ClassSpec, variant: str, g: Graph, succ: SuccessorFn,
             seeds: list[int], limit: int | None = None,
             check: bool = False, mode_used: str = "delay") -> Enumerator:
    stats = EnumerationStats()
    it = traverse_iter(cs, variant, g, succ, seeds, stats=stats, check=check)
    return Enumerator(cs, variant, g, it, mode_used, limit=limit, stats=stats)


# ---------------------------------------------------------------------------
# t-restricted solvers and the lifting combinator


@dataclass(frozen=True)
class RestrictedInstance:
    """A graph together with a set Z contained in every forbidden set."""

    graph: Graph
    z_mask: int

    def level(self) -> int:
        return bit_count(self.z_mask)


class RestrictedSolver:
    """Solver for the t-restricted problem at a fixed level t.

    ``solve`` returns all maximal (connected) P sets of the instance graph.
    Results are memoized per instance, which the exhaustive test sweeps rely
    on heavily.
    """

    def __init__(self, level: int, cs: ClassSpec, variant: str,
                 fn: Callable[[RestrictedInstance], list[int]], name: str):
        self.level = level
        self.spec = cs
        self.variant = variant
        self.name = name
        self._fn = fn
        self._memo: dict[tuple[Graph, int], tuple[int, ...]] = {}

    def solve(self, instance: RestrictedInstance) -> list[int]:
        if instance.level() != self.level:
            raise DomainError(
                f"instance has |Z|={instance.level()}, solver level {self.level}"
            )
        key = (instance.graph, instance.z_mask)
        hit = self._memo.get(key)
        if hit is None:
            hit = tuple(self._fn(instance))
            self._memo[key] = hit
        return list(hit)


def base_solver(level: int, cs: ClassSpec, variant: str,
                fn: Callable[[RestrictedInstance], list[int]],
                name: str) -> RestrictedSolver:
    return RestrictedSolver(level, cs, variant, fn, name)


def _lift_iter(inner: RestrictedSolver, cs: ClassSpec, variant: str,
               self_solve: Callable[[RestrictedInstance], list[int]],
               g: Graph, z_mask: int,
               stats: EnumerationStats | None = None) -> Iterator[int]:
    """Solve a level-(inner.level - 1) instance by mapping over the inner
    solver; yields solutions as discovered.

    Trivial cases first (G in the class; Z a forbidden set; Z a maximal P
    set), then the non-superset catalogue, then a solution-map traversal
    whose succ(S, v) extends the inner solutions of (G[S + v], Z + v).
    """
    full = g.full_mask
    if g.n == 0:
        return
    if is_in_class(cs, g):
        if variant == GENERAL:
            yield full
        else:
            yield from g.components()
        return
    nz = not_z_solutions(cs, g, z_mask, variant) if z_mask else []
    if not set_in_class(cs, g, z_mask):
        # Valid instances have Z minimal here: every forbidden set contains
        # Z, and a forbidden set strictly inside Z would miss some of it.
        for z in bits(z_mask):
            if not set_in_class(cs, g, z_mask & ~(1 << z)):
                raise ContractViolation(
                    "Z is neither a P set nor a minimal forbidden set; "
                    "instance is not t-restricted"
                )
        yield from nz
        return
    if z_mask and is_maximal_general(cs, g, z_mask):
        emitted = set()
        for s in nz:
            emitted.add(s)
            yield s
        if z_mask not in emitted and (
            variant == GENERAL or g.is_connected(z_mask)
        ):
            yield z_mask
        return

    seeds: list[int] = list(nz)
    if variant == GENERAL:
        seeds.append(extend_general(cs, g, z_mask))
    else:
        if z_mask and g.is_connected(z_mask):
            seeds.append(extend_connected(cs, g, z_mask))
        for v in range(g.n):
            seeds.append(extend_connected(cs, g, 1 << v))

    seen: set[int] = set()
    queue: deque[int] = deque()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            queue.append(s)
            yield s
    while queue:
        s = queue.popleft()
        scan = g.neighbors(s) if variant == CONNECTED else full & ~s
        for v in bits(scan):
            b = 1 << v
            if stats is not None:
                stats.bump()
            if z_mask & b:
                # v is one of the special vertices; the sub-instance keeps
                # the same restriction level, so recurse on the strictly
                # smaller graph (never on the instance itself).
                if variant == GENERAL:
                    continue
                sub_mask = s | b
                if sub_mask == full or z_mask & ~sub_mask:
                    continue
                view = induced_subgraph(g, sub_mask)
                subsols_local = self_solve(
                    RestrictedInstance(view.graph, view.to_local_mask(z_mask))
                )
            else:
                if z_mask & ~s:
                    continue  # cannot form a (t+1)-restricted sub-instance
                view = induced_subgraph(g, s | b)
                subsols_local = inner.solve(
                    RestrictedInstance(view.graph, view.to_local_mask(z_mask | b))
                )
            for local in subsols_local:
                sp = view.to_parent_mask(local)
                if sp == s:
                    continue
                if stats is not None:
                    stats.bump()
                t = extend(cs, variant, g, sp)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
                    yield t


def lift_restricted(inner: RestrictedSolver, cs: ClassSpec | None = None,
                    variant: str | None = None) -> RestrictedSolver:
    """Turn a (t+1)-restricted solver into a t-restricted one."""
    cs = cs if cs is not None else inner.spec
    variant = variant if variant is not None else inner.variant
    if inner.level < 1:
        raise DomainError("cannot lift below level 0")

    solver_box: list[RestrictedSolver] = []

    def fn(inst: RestrictedInstance) -> list[int]:
        return list(
            _lift_iter(inner, cs, variant, solver_box[0].solve,
                       inst.graph, inst.z_mask)
        )

    solver = RestrictedSolver(inner.level - 1, cs, variant, fn,
                              name=f"lift({inner.name})")
    solver_box.append(solver)
    return solver


def lift_iter_streaming(inner: RestrictedSolver, cs: ClassSpec, variant: str,
                        g: Graph, z_mask: int,
                        stats: EnumerationStats) -> Iterator[int]:
    """Streaming top-level lift (used for delay-mode enumerators)."""
    solver_box: list[RestrictedSolver] = []

    def fn(inst: RestrictedInstance) -> list[int]:
        return list(
            _lift_iter(inner, cs, variant, solver_box[0].solve,
                       inst.graph, inst.z_mask)
        )

    helper = RestrictedSolver(inner.level - 1, cs, variant, fn, name="stream-helper")
    solver_box.append(helper)
    return _lift_iter(inner, cs, variant, helper.solve, g, z_mask, stats=stats)


# ---------------------------------------------------------------------------
# Abortable total-time solvers and the NEXT wrapper


@dataclass(frozen=True)
class SolverRun:
    finished: bool
    solutions: tuple[int, ...]
    steps: int


class AbortableSolver:
    """Total-time solver with an abstract step counter.

    One step is counted per emitted solution, so any budget polynomial with
    p(n, k) >= k is an honest bound: a run aborts exactly when the instance
    has more solutions than the allotted budget.  Full runs are memoized per
    induced subgraph.
    """

    def __init__(self, solve_fn: Callable[[Graph], list[int]], name: str = "solver"):
        self._solve = solve_fn
        self.name = name
        self._memo: dict[Graph, tuple[int, ...]] = {}

    def full_solutions(self, g: Graph) -> tuple[int, ...]:
        hit = self._memo.get(g)
        if hit is None:
            hit = tuple(self._solve(g))
            self._memo[g] = hit
        return hit

    def run(self, g: Graph, step_limit: int | None = None) -> SolverRun:
        sols = self.full_solutions(g)
        steps = len(sols)
        if step_limit is not None and steps > step_limit:
            return SolverRun(finished=False, solutions=(), steps=step_limit)
        return SolverRun(finished=True, solutions=sols, steps=steps)


def _check_budget(budget: BudgetFn, n: int, k: int) -> int:
    value = budget(n, k)
    if value < k:
        raise ConfigurationError(
            f"budget polynomial is dishonest for the emission step model: "
            f"p({n}, {k}) = {value} < {k}"
        )
    return value


def next_solution(g: Graph, known: list[int], total_solver: AbortableSolver,
                  variant: str, cs: ClassSpec,
                  budget: BudgetFn = default_budget):
    """One call of the NEXT procedure: a fresh solution or COMPLETED.

    Mirrors the incremental wrappers step by step: a budgeted run on G, a
    vertex-peeling loop keeping the vertices whose removal makes the
    instance easy enough to abort, and a final unbounded run on the peeled
    core, whose fresh sub-solution is extended to a solution of G.
    """
    n = g.n
    known_set = set(known)
    res = total_solver.run(g, _check_budget(budget, n, len(known) + 1))
    if res.finished:
        for s in res.solutions:
            if s not in known_set:
                return s
        return COMPLETED
    if variant == CONNECTED:
        peel_budget = _check_budget(budget, n, n * len(known) + 1)
    else:
        peel_budget = _check_budget(budget, n, len(known) + 1)
    cur = g.full_mask
    for v in range(n):
        sub_mask = cur & ~(1 << v)
        view = induced_subgraph(g, sub_mask)
        res = total_solver.run(view.graph, peel_budget)
        if res.finished:
            for local in res.solutions:
                sp = view.to_parent_mask(local)
                if not any(sp & k == sp for k in known):
                    return extend(cs, variant, g, sp)
            # keep v: cur unchanged
        else:
            cur = sub_mask
    view = induced_subgraph(g, cur)
    res = total_solver.run(view.graph, None)
    for local in res.solutions:
        sp = view.to_parent_mask(local)
        if not any(sp & k == sp for k in known):
            return extend(cs, variant, g, sp)
    raise ContractViolation(
        "final unbounded run found no fresh sub-solution; the wrapped "
        "solver violated its budget accounting"
    )


def incremental_iter(cs: ClassSpec, variant: str, g: Graph,
                     total_solver: AbortableSolver,
                     budget: BudgetFn = default_budget,
                     stats: EnumerationStats | None = None) -> Iterator[int]:
    known: list[int] = []
    while True:
        if stats is not None:
            stats.bump()
        nxt = next_solution(g, known, total_solver, variant, cs, budget=budget)
        if nxt is COMPLETED:
            return
        if nxt in known:
            raise ContractViolation("NEXT returned a known solution")
        known.append(nxt)
        yield nxt
