"""Brute-force reference computations.

Nothing here reuses the searchers or the peeling code; these are the
independent routes the experiments and tests compare against.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from .core import Digraph, Hypergraph, Labeling


def chromatic_number(g: Hypergraph) -> int:
    """Smallest ``c`` admitting a proper colouring, by trying every colouring."""
    if g.n == 0:
        return 0
    for c in range(1, g.n + 1):
        # vertex 0 gets colour 0 without loss of generality
        for rest in product(range(c), repeat=g.n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in g.edges):
                return c
    return g.n


def _has_cycle(n: int, arcs: list[tuple[int, int]], members: set[int]) -> bool:
    succ = {v: [] for v in members}
    for u, v in arcs:
        if u in members and v in members:
            succ[u].append(v)
    state = dict.fromkeys(members, 0)

    def visit(v) -> bool:
        state[v] = 1
        for u in succ[v]:
            if state[u] == 1 or (state[u] == 0 and visit(u)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in members)


def dichromatic_number(dg: Digraph) -> int:
    """Fewest classes inducing acyclic digraphs, by exhaustive assignment."""
    if dg.n == 0:
        return 0
    arcs = list(dg.arcs)
    for c in range(1, dg.n + 1):
        for rest in product(range(c), repeat=dg.n - 1):
            col = (0,) + rest
            if all(not _has_cycle(dg.n, arcs, {v for v in range(dg.n) if col[v] == i})
                   for i in range(c)):
                return c
    return dg.n


def simple_paths(g: Hypergraph | Digraph) -> Iterator[tuple[int, ...]]:
    """Every vertex sequence forming a path (one direction per digraph arc)."""
    if isinstance(g, Digraph):
        nbrs = [sorted(s) for s in g.succ]
    else:
        nbrs = [sorted(s) for s in g.adjacency]

    def grow(path):
        yield tuple(path)
        for u in nbrs[path[-1]]:
            if u not in path:
                path.append(u)
                yield from grow(path)
                path.pop()

    for v in range(g.n):
        yield from grow([v])


def longest_increasing_vertex_path(g: Hypergraph | Digraph, lab: Labeling) -> int:
    best = 0
    for p in simple_paths(g):
        if all(lab[a] < lab[b] for a, b in zip(p, p[1:])):
            best = max(best, len(p))
    return best


def loose_edge_paths(g: Hypergraph | Digraph) -> Iterator[tuple[int, ...]]:
    """Every edge sequence forming a loose path (head to tail for digraphs),
    regardless of labels."""
    directed = isinstance(g, Digraph)
    sets = [frozenset(a) for a in g.arcs] if directed else list(g.edge_sets)
    m = len(sets)

    def ok(path, f):
        if f in path:
            return False
        last = path[-1]
        if directed and g.arcs[last][1] != g.arcs[f][0]:
            return False
        if len(sets[last] & sets[f]) != 1:
            return False
        if any(sets[e] & sets[f] for e in path[:-1]):
            return False
        if not directed and len(path) >= 2:
            # the junction into f must not be the junction out of the previous edge
            if sets[path[-2]] & sets[last] == sets[last] & sets[f]:
                return False
        return True

    def grow(path):
        yield tuple(path)
        for f in range(m):
            if ok(path, f):
                path.append(f)
                yield from grow(path)
                path.pop()

    for e in range(m):
        yield from grow([e])


def increasing_edge_paths(g, lab: Labeling) -> list[tuple[int, ...]]:
    return [p for p in loose_edge_paths(g) if all(lab[a] < lab[b] for a, b in zip(p, p[1:]))]


def max_core_brute(g: Hypergraph, d: int, within: set[int] | None = None) -> frozenset[int]:
    """Union of every vertex subset whose induced minimum degree is at least ``d``."""
    verts = sorted(range(g.n) if within is None else within)
    union: set[int] = set()
    for r in range(1, len(verts) + 1):
        for sub in combinations(verts, r):
            s = set(sub)
            if all(len(g.adjacency[v] & s) >= d for v in s):
                union |= s
    return frozenset(union)


def paired_brute(g: Hypergraph, v1: set[int], v2: set[int], d: int) -> bool:
    """Any ``W1 ⊆ V1``, ``W2 ⊆ V2`` with induced min degree ``>= d`` joined by an edge?"""
    def good_sets(side):
        side = sorted(side)
        out = []
        for r in range(1, len(side) + 1):
            for sub in combinations(side, r):
                s = set(sub)
                if all(len(g.adjacency[v] & s) >= d for v in s):
                    out.append(s)
        return out

    ones, twos = good_sets(v1), good_sets(v2)
    for w1 in ones:
        for w2 in twos:
            if any((a in w1 and b in w2) or (b in w1 and a in w2) for a, b in g.edges):
                return True
    return False


def two_sided_brute(g: Hypergraph | Digraph, lab: Labeling, min_neg: int, min_pos: int) -> bool:
    """Does some increasing path hold ``min_neg`` negatives and ``min_pos`` non-negatives?"""
    for p in simple_paths(g):
        if all(lab[a] < lab[b] for a, b in zip(p, p[1:])):
            neg = sum(1 for v in p if lab[v] < 0)
            if neg >= max(1, min_neg) and len(p) - neg >= max(1, min_pos):
                return True
    return False


def min_degree_subset_exists(adj_bits: list[int], n: int, d: int) -> bool:
    """Exhaustive check over every nonempty subset of ``0..n-1`` (bitmask
    adjacency) for one with induced minimum degree at least ``d``."""
    import numpy as np

    if n == 0:
        return False
    if n > 26:
        raise ValueError("subset enumeration limited to 26 vertices")
    adj = np.array(adj_bits, dtype=np.int64)
    chunk = 1 << min(n, 20)
    for start in range(1, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(n):
            inside = (masks >> v) & 1
            common = masks & adj[v]
            cnt = np.zeros(masks.shape, dtype=np.int64)
            for u in range(n):
                cnt += (common >> u) & 1
            ok &= (inside == 0) | (cnt >= d)
        if ok.any():
            return True
    return False


def directed_paired_brute(dg: Digraph, v1: set[int], v2: set[int], d: int) -> bool:
    """Any ``W1 ⊆ V1`` with induced out-degree ``>= d`` and ``W2 ⊆ V2`` with
    induced in-degree ``>= d`` plus an arc from ``W2`` into ``W1``?"""
    def good_sets(side, nbrs):
        side = sorted(side)
        out = []
        for r in range(1, len(side) + 1):
            for sub in combinations(side, r):
                s = set(sub)
                if all(len(nbrs[v] & s) >= d for v in s):
                    out.append(s)
        return out

    ones, twos = good_sets(v1, dg.succ), good_sets(v2, dg.pred)
    for w1 in ones:
        for w2 in twos:
            if any(a in w2 and b in w1 for a, b in dg.arcs):
                return True
    return False


def max_out_core_brute(dg: Digraph, d: int, within) -> frozenset[int]:
    """Union of the subsets of ``within`` with induced out-degree ``>= d``."""
    verts = sorted(within)
    union: set[int] = set()
    for r in range(1, len(verts) + 1):
        for sub in combinations(verts, r):
            s = set(sub)
            if all(len(dg.succ[v] & s) >= d for v in s):
                union |= s
    return frozenset(union)
