"""Core and peeling computations.

Each "infinite degree" condition becomes an explicit threshold.  Peeling is
worklist based: a vertex is queued as soon as its count drops below the
threshold, and the queue is served by (round, id) so the elimination order
is deterministic.  The resulting core does not depend on that order.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .core import (DomainError, Digraph, Hypergraph, Labeling, ParameterError, Partition,
                   partition_violations)


@dataclass(frozen=True)
class Elimination:
    vertex: int
    round: int
    count: int


@dataclass(frozen=True)
class CoreResult:
    """Fixpoint of a peeling process.

    ``elimination`` lists every peeled vertex with its peel round and the
    count that fell short of ``threshold`` at the time it was removed.
    """

    core: frozenset[int]
    elimination: tuple[Elimination, ...]
    threshold: int

    @property
    def order(self) -> list[int]:
        return [e.vertex for e in self.elimination]

    def __bool__(self) -> bool:
        return bool(self.core)


def _peel(n: int, counts: list[int], threshold: int,
          on_remove: Callable[[int, set[int]], Iterable[int]], alive: set[int]) -> CoreResult:
    """Generic peeling driver.

    ``counts[v]`` is the current count of ``v``.  ``on_remove(v, alive)`` is
    called after ``v`` leaves ``alive``; it must decrement ``counts`` of the
    affected vertices and yield them.
    """
    heap = [(1, v) for v in sorted(alive) if counts[v] < threshold]
    heapq.heapify(heap)
    queued = {v for _, v in heap}
    elim: list[Elimination] = []
    while heap:
        rnd, v = heapq.heappop(heap)
        elim.append(Elimination(v, rnd, counts[v]))
        alive.discard(v)
        for u in on_remove(v, alive):
            if u in alive and u not in queued and counts[u] < threshold:
                queued.add(u)
                heapq.heappush(heap, (rnd + 1, u))
    return CoreResult(frozenset(alive), tuple(elim), threshold)


def d_core(g: Hypergraph, d: int, within: Iterable[int] | None = None) -> CoreResult:
    """Largest vertex set with minimum induced degree at least ``d``.

    ``within`` restricts the computation to an induced subgraph (ids stay
    those of ``g``).
    """
    if d < 0:
        raise ParameterError("d_core needs d >= 0")
    if g.k != 2:
        raise DomainError("d_core is defined for 2-uniform graphs")
    alive = set(range(g.n)) if within is None else set(within)
    counts = [0] * g.n
    for v in alive:
        counts[v] = sum(1 for u in g.adjacency[v] if u in alive)

    def on_remove(v, alive):
        for u in g.adjacency[v]:
            if u in alive:
                counts[u] -= 1
                yield u

    return _peel(g.n, counts, d, on_remove, alive)


def l_core(h: Hypergraph, ell: int, d: int) -> CoreResult:
    """Largest ``V'`` in which every vertex lies in at least ``d`` edges that
    meet ``V'`` in at least ``ell`` vertices."""
    if not 2 <= ell <= h.k:
        raise ParameterError(f"l_core needs 2 <= ell <= k={h.k}")
    if d < 1:
        raise ParameterError("l_core needs d >= 1")
    alive = set(range(h.n))
    inside = [len(e) for e in h.edge_sets]     # |V' ∩ e|
    counts = [sum(1 for e in h.incidence[v] if inside[e] >= ell) for v in range(h.n)]

    def on_remove(v, alive):
        for e in h.incidence[v]:
            inside[e] -= 1
            if inside[e] == ell - 1:
                for u in h.edge_sets[e]:
                    if u in alive:
                        counts[u] -= 1
                        yield u

    return _peel(h.n, counts, d, on_remove, alive)


def out_core(dg: Digraph, thr: int, within: Iterable[int] | None = None) -> CoreResult:
    """Largest ``W`` with every out-degree in ``D[W]`` at least ``thr``."""
    return _directed_core(dg, thr, within, out=True)


def in_core(dg: Digraph, thr: int, within: Iterable[int] | None = None) -> CoreResult:
    """Largest ``W`` with every in-degree in ``D[W]`` at least ``thr``."""
    return _directed_core(dg, thr, within, out=False)


def _directed_core(dg: Digraph, thr: int, within, out: bool) -> CoreResult:
    if thr < 0:
        raise ParameterError("core threshold must be >= 0")
    fwd = dg.succ if out else dg.pred
    back = dg.pred if out else dg.succ
    alive = set(range(dg.n)) if within is None else set(within)
    counts = [0] * dg.n
    for v in alive:
        counts[v] = sum(1 for u in fwd[v] if u in alive)

    def on_remove(v, alive):
        for u in back[v]:
            if u in alive:
                counts[u] -= 1
                yield u

    return _peel(dg.n, counts, thr, on_remove, alive)


def core_number(g: Hypergraph) -> list[int]:
    """Largest ``d`` for which each vertex survives in the d-core."""
    result = [0] * g.n
    d = 1
    alive = set(range(g.n))
    while alive:
        alive = set(d_core(g, d, within=alive).core)
        for v in alive:
            result[v] = d
        d += 1
    return result


# ---------------------------------------------------------------------------
# Paired cores
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairedCoreResult:
    found: bool
    w1: frozenset[int]
    w2: frozenset[int]
    crossing: tuple[int, int] | None  # (w1, w2) for graphs, arc (w2, w1) for digraphs

    def __bool__(self) -> bool:
        return self.found


def _check_bipartition(n: int, v1: Iterable[int], v2: Iterable[int]) -> tuple[set[int], set[int]]:
    v1, v2 = set(v1), set(v2)
    problems = partition_violations([v1, v2], n)
    if problems:
        raise DomainError("not a partition: " + "; ".join(problems))
    return v1, v2


def paired_core_check(g: Hypergraph, v1: Iterable[int], v2: Iterable[int], d: int) -> PairedCoreResult:
    """Is there an edge between the d-cores of ``g[V1]`` and ``g[V2]``?

    Any valid pair ``(W1, W2)`` lies inside the two cores, so the cores
    witness exactly when some pair does.
    """
    v1, v2 = _check_bipartition(g.n, v1, v2)
    w1 = d_core(g, d, within=v1).core
    w2 = d_core(g, d, within=v2).core
    for e in g.edges:
        a, b = e
        if a in w1 and b in w2:
            return PairedCoreResult(True, w1, w2, (a, b))
        if b in w1 and a in w2:
            return PairedCoreResult(True, w1, w2, (b, a))
    return PairedCoreResult(False, w1, w2, None)


def directed_paired_core_check(dg: Digraph, v1: Iterable[int], v2: Iterable[int],
                               d: int) -> PairedCoreResult:
    """Out-core of ``D[V1]``, in-core of ``D[V2]`` and an arc from the second
    into the first."""
    v1, v2 = _check_bipartition(dg.n, v1, v2)
    w1 = out_core(dg, d, within=v1).core
    w2 = in_core(dg, d, within=v2).core
    for u, v in dg.arcs:
        if u in w2 and v in w1:
            return PairedCoreResult(True, w1, w2, (u, v))
    return PairedCoreResult(False, w1, w2, None)


def paired_core_condition(g: Hypergraph, d: int, min_side: int):
    """Check the paired-core condition over every bipartition whose sides both
    have at least ``min_side`` vertices.  Returns the first failing
    ``(V1, V2)`` or ``None``.  Exponential; meant for small graphs."""
    verts = list(range(g.n))
    for size in range(min_side, g.n - min_side + 1):
        for side in combinations(verts, size):
            v1 = set(side)
            v2 = set(verts) - v1
            if not paired_core_check(g, v1, v2, d).found:
                return v1, v2
    return None


# ---------------------------------------------------------------------------
# Maximal-vertex peeling and chi-star partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChiStarResult:
    """``partition.blocks[j-1]`` is ``V_j``; ``V_k`` was extracted first."""

    partition: Partition

    @property
    def k(self) -> int:
        return len(self.partition)

    @property
    def rounds(self) -> list[frozenset[int]]:
        """Blocks in extraction order ``V_k, V_{k-1}, ..., V_1``."""
        return list(reversed(self.partition.blocks))


def maximal_peel(g: Hypergraph, phi: Labeling) -> ChiStarResult:
    """Repeatedly strip the vertices with no larger-labeled neighbour left."""
    if len(phi) != g.n:
        raise DomainError("labeling does not cover the vertex set")
    remaining = set(range(g.n))
    rounds: list[frozenset[int]] = []
    while remaining:
        top = frozenset(v for v in remaining
                        if not any(u in remaining and phi[u] > phi[v] for u in g.adjacency[v]))
        rounds.append(top)
        remaining -= top
    if not rounds:
        rounds.append(frozenset())
    return ChiStarResult(Partition(tuple(reversed(rounds)), g.n))


def _independent(g: Hypergraph, block: Iterable[int]) -> bool:
    block = set(block)
    return all(not (g.adjacency[v] & block) for v in block)


def _back_degrees_ok(g: Hypergraph, assign: Sequence[int], cap: int | None) -> bool:
    if cap is None:
        return True
    return all(sum(1 for u in g.adjacency[v] if assign[u] < assign[v]) <= cap
               for v in range(g.n))


def chi_star_upper_bound_search(g: Hypergraph, k: int, budget: int = 200_000,
                                back_degree_cap: int | None = None,
                                exact_limit: int = 12, seed: int = 0) -> Partition | None:
    """Partition into at most ``k`` ordered independent blocks.

    With ``back_degree_cap`` every vertex of ``V_j`` may have at most that
    many neighbours in ``V_1..V_{j-1}``.  Graphs with at most
    ``exact_limit`` vertices are searched exhaustively; larger ones get
    greedy colouring followed by a bounded local search (``budget`` moves).
    """
    if k < 1:
        raise ParameterError("chi_star_upper_bound_search needs k >= 1")
    if g.n == 0:
        return Partition((), 0)
    if g.n <= exact_limit:
        assign = _exact_blocks(g, k, back_degree_cap)
    else:
        assign = _heuristic_blocks(g, k, back_degree_cap, budget, seed)
    if assign is None:
        return None
    used = max(assign)
    return Partition(tuple(frozenset(v for v in range(g.n) if assign[v] == j)
                           for j in range(1, used + 1)), g.n)


def _exact_blocks(g: Hypergraph, k: int, cap: int | None) -> list[int] | None:
    order = sorted(range(g.n), key=lambda v: -len(g.adjacency[v]))
    assign = [0] * g.n
    back = [0] * g.n  # neighbours already placed in a lower block

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # symmetry: without a cap block labels are interchangeable
        limit = min(k, used + 1) if cap is None else k
        for b in range(1, limit + 1):
            if any(assign[u] == b for u in g.adjacency[v]):
                continue
            if cap is not None:
                lower = sum(1 for u in g.adjacency[v] if 0 < assign[u] < b)
                if lower > cap:
                    continue
                bumped = [u for u in g.adjacency[v] if assign[u] > b]
                if any(back[u] + 1 > cap for u in bumped):
                    continue
                for u in bumped:
                    back[u] += 1
                back[v] = lower
            assign[v] = b
            if place(i + 1, max(used, b)):
                return True
            assign[v] = 0
            if cap is not None:
                for u in bumped:
                    back[u] -= 1
                back[v] = 0
        return False

    return assign if place(0, 0) else None


def _heuristic_blocks(g: Hypergraph, k: int, cap: int | None, budget: int,
                      seed: int) -> list[int] | None:
    import random

    rng = random.Random(seed)
    # DSATUR colouring
    assign = [0] * g.n
    sat: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not assign[u]),
                key=lambda u: (len(sat[u]), len(g.adjacency[u]), -u))
        c = 1
        while c in sat[v]:
            c += 1
        assign[v] = c
        for u in g.adjacency[v]:
            sat[u].add(c)
    if max(assign) <= k and _back_degrees_ok(g, assign, cap):
        return assign
    # min-conflicts local search with k colours
    assign = [min(a, k) for a in assign]

    def conflicts(v):
        bad = sum(1 for u in g.adjacency[v] if assign[u] == assign[v])
        if cap is not None:
            bad += max(0, sum(1 for u in g.adjacency[v] if assign[u] < assign[v]) - cap)
        return bad

    for _ in range(budget):
        bad = [v for v in range(g.n) if conflicts(v)]
        if not bad:
            return assign
        v = rng.choice(bad)
        best_c, best_score = assign[v], None
        for c in range(1, k + 1):
            assign[v] = c
            score = conflicts(v) + sum(conflicts(u) for u in g.adjacency[v])
            if best_score is None or score < best_score or (score == best_score and rng.random() < 0.5):
                best_c, best_score = c, score
        assign[v] = best_c
    return None


# ---------------------------------------------------------------------------
# Two-distance graph
# ---------------------------------------------------------------------------


def two_distance_graph(g: Hypergraph, t: int) -> Hypergraph:
    """Same vertices; ``u ~ v`` iff they have at least ``t`` common neighbours."""
    if t < 1:
        raise ParameterError("two_distance_graph needs t >= 1")
    edges = [(u, v) for u, v in combinations(range(g.n), 2)
             if len(g.adjacency[u] & g.adjacency[v]) >= t]
    return Hypergraph(2, g.n, tuple(edges), g.names)


def timed(fn, *args, **kwargs):
    """Run ``fn`` and return ``(result, seconds)``."""
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start
