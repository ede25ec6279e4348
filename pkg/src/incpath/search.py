"""Searchers for increasing structures and the adversarial minimiser.

Vertex-labelled path problems are solved exactly by dynamic programming over
the acyclic "label increases along the edge" orientation.  Edge-labelled
path problems are exponential in general; they run a depth-first search
pruned by a trail bound and respect a :class:`SearchBudget`.
"""

from __future__ import annotations

import bisect
import math
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .core import (EDGES, VERTICES, BudgetExhausted, Digraph, DomainError, Hypergraph,
                   IncreasingWitness, Labeling, ParameterError, WitnessKind)
from .peeling import paired_core_check, directed_paired_core_check


@dataclass(frozen=True)
class SearchBudget:
    """Caps for exponential searches.

    With ``exact`` set, hitting a cap raises :class:`BudgetExhausted`;
    otherwise the best structure found so far is returned.
    """

    max_nodes: int | None = 2_000_000
    time_limit: float | None = None
    exact: bool = True


UNLIMITED = SearchBudget(None, None, True)


class _Ticker:
    def __init__(self, budget: SearchBudget | None):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.start = time.perf_counter()
        self.hit = False

    def tick(self) -> bool:
        """Count one node; ``True`` when a cap is reached."""
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            self.hit = True
        elif b.time_limit is not None and self.nodes % 256 == 0 \
                and time.perf_counter() - self.start > b.time_limit:
            self.hit = True
        return self.hit


class _Stop(Exception):
    pass


def _finish(ticker: _Ticker, best, what: str, stats: dict | None):
    if stats is not None:
        stats.update(nodes=ticker.nodes, exhaustive=not ticker.hit)
    if ticker.hit and ticker.budget.exact:
        raise BudgetExhausted(f"{what}: budget exhausted after {ticker.nodes} nodes", best)
    return best


def _need(lab: Labeling, size: int, target: str, what: str):
    if lab.target != target or len(lab) != size:
        raise DomainError(f"{what} needs a labeling of all {size} {target}")


# ---------------------------------------------------------------------------
# Vertex-labelled paths
# ---------------------------------------------------------------------------


def _dp_paths(n: int, nbrs, lab: Labeling, members: Iterable[int] | None = None):
    """``best[v]``: vertices on the longest increasing path starting at ``v``;
    ``nxt[v]``: its successor."""
    alive = set(range(n)) if members is None else set(members)
    best = [0] * n
    nxt = [-1] * n
    for v in sorted(alive, key=lab.__getitem__, reverse=True):
        b, arg = 0, -1
        for u in nbrs(v):
            if u in alive and lab[u] > lab[v] and (best[u] > b or (best[u] == b and 0 <= u < arg)):
                b, arg = best[u], u
        best[v] = 1 + b
        nxt[v] = arg
    return best, nxt


def _walk(start: int, nxt: list[int]) -> list[int]:
    out = [start]
    while nxt[out[-1]] >= 0:
        out.append(nxt[out[-1]])
    return out


def longest_path_from(g: Hypergraph | Digraph, lab: Labeling) -> list[int]:
    """Longest increasing path (in vertices) starting at each vertex."""
    nbrs = g.succ.__getitem__ if isinstance(g, Digraph) else g.adjacency.__getitem__
    return _dp_paths(g.n, nbrs, lab)[0]


def longest_increasing_vertex_path(g: Hypergraph | Digraph, lab: Labeling) -> IncreasingWitness:
    """Exact longest increasing vertex path; follows arc directions on digraphs."""
    _need(lab, g.n, VERTICES, "vertex path search")
    directed = isinstance(g, Digraph)
    nbrs = g.succ.__getitem__ if directed else g.adjacency.__getitem__
    if g.n == 0:
        return IncreasingWitness(WitnessKind.VERTEX_PATH, (), (), directed=directed)
    best, nxt = _dp_paths(g.n, nbrs, lab)
    start = max(range(g.n), key=lambda v: (best[v], -lab[v]))
    path = _walk(start, nxt)
    edges = _path_edges(g, path)
    return IncreasingWitness(WitnessKind.VERTEX_PATH, tuple(path), tuple(edges), directed=directed)


longest_increasing_vertex_path_d = longest_increasing_vertex_path


def _path_edges(g, path: Sequence[int]) -> list[int]:
    if isinstance(g, Digraph):
        return [g.arc_index[(a, b)] for a, b in zip(path, path[1:])]
    if g.k != 2:
        return []
    return [g.edge_index[frozenset((a, b))] for a, b in zip(path, path[1:])]


# ---------------------------------------------------------------------------
# Edge-labelled paths
# ---------------------------------------------------------------------------


def longest_increasing_edge_trail(g: Hypergraph | Digraph, lab: Labeling) -> int:
    """Single pass over edges in label order keeping, per vertex, the longest
    increasing trail that can continue from it.  Upper bound for paths."""
    directed = isinstance(g, Digraph)
    _need(lab, g.m, EDGES, "trail bound")
    f = [0] * g.n
    for e in lab.sequence:
        if directed:
            u, v = g.arcs[e]
            f[v] = max(f[v], f[u] + 1)
            continue
        vs = g.edges[e]
        old = [f[v] for v in vs]
        for i, v in enumerate(vs):
            f[v] = max(f[v], 1 + max(old[j] for j in range(len(vs)) if j != i))
    return max(f, default=0)


class _ReverseTrail:
    """``query(v, lam)``: longest increasing trail leaving ``v`` through edges
    labelled above ``lam`` (an admissible bound for the path search)."""

    def __init__(self, g, lab: Labeling):
        directed = isinstance(g, Digraph)
        f = [0] * g.n
        self.keys: list[list[int]] = [[] for _ in range(g.n)]  # negated labels, ascending
        self.vals: list[list[int]] = [[] for _ in range(g.n)]
        for e in reversed(lab.sequence):
            if directed:
                u, v = g.arcs[e]
                updates = [(u, f[v] + 1)]
            else:
                vs = g.edges[e]
                old = [f[v] for v in vs]
                updates = [(v, 1 + max(old[j] for j in range(len(vs)) if j != i))
                           for i, v in enumerate(vs)]
            for v, val in updates:
                if val > f[v]:
                    f[v] = val
                    self.keys[v].append(-lab[e])
                    self.vals[v].append(val)

    def query(self, v: int, lam: int) -> int:
        # entries recorded while processing labels > lam have key < -lam
        i = bisect.bisect_left(self.keys[v], -lam)
        return self.vals[v][i - 1] if i else 0


def longest_increasing_edge_path(g: Hypergraph | Digraph, lab: Labeling,
                                 budget: SearchBudget | None = None,
                                 stats: dict | None = None) -> IncreasingWitness:
    """Exact longest increasing (loose) edge path.

    On hypergraphs consecutive edges share exactly one vertex and
    non-consecutive edges are disjoint; on digraphs arcs run head to tail
    through distinct vertices.
    """
    directed = isinstance(g, Digraph)
    _need(lab, g.m, EDGES, "edge path search")
    ticker = _Ticker(budget)
    bound = _ReverseTrail(g, lab)
    kind = WitnessKind.EDGE_PATH
    if g.m == 0:
        return _finish(ticker, IncreasingWitness(kind, (), (), directed=directed), "edge path", stats)
    sets = [frozenset(a) for a in g.arcs] if directed else g.edge_sets
    inc = g.out_arcs if directed else g.incidence
    best: list[int] = []
    path: list[int] = []
    used: set[int] = set()

    def exits(e: int, entry: int | None) -> list[int]:
        if directed:
            return [g.arcs[e][1]]
        return [v for v in g.edges[e] if v != entry]

    def dfs(e: int, entry: int | None):
        nonlocal best
        if ticker.tick():
            raise _Stop
        if len(path) > len(best):
            best = list(path)
        outs = exits(e, entry)
        if len(path) + max(bound.query(v, lab[e]) for v in outs) <= len(best):
            return
        for v in outs:
            for f in inc[v]:
                if lab[f] <= lab[e]:
                    continue
                fresh = sets[f] - {v}
                if fresh & used:
                    continue
                used.update(fresh)
                path.append(f)
                dfs(f, v)
                path.pop()
                used.difference_update(fresh)

    try:
        for e in sorted(range(g.m), key=lab.__getitem__):
            if 1 + max(bound.query(v, lab[e]) for v in exits(e, None)) <= len(best):
                continue
            used.update(sets[e])
            path.append(e)
            dfs(e, None)
            path.pop()
            used.difference_update(sets[e])
    except _Stop:
        pass
    witness = _edge_witness(g, best, directed)
    return _finish(ticker, witness, "edge path", stats)


longest_increasing_edge_path_d = longest_increasing_edge_path


def _edge_witness(g, edges: Sequence[int], directed: bool) -> IncreasingWitness:
    vertices: list[int] = []
    if edges:
        if directed:
            vertices = [g.arcs[edges[0]][0]] + [g.arcs[e][1] for e in edges]
        elif g.k == 2:
            first = g.edges[edges[0]]
            if len(edges) == 1:
                vertices = list(first)
            else:
                shared = next(iter(g.edge_sets[edges[0]] & g.edge_sets[edges[1]]))
                vertices = [v for v in first if v != shared] + [shared]
                for e in edges[1:]:
                    vertices.append(next(iter(g.edge_sets[e] - {vertices[-1]})))
    return IncreasingWitness(WitnessKind.EDGE_PATH, tuple(vertices), tuple(edges), directed=directed)


def iter_increasing_edge_paths(g: Hypergraph | Digraph, lab: Labeling) -> Iterator[tuple[int, ...]]:
    """Every increasing edge path (as a tuple of edge ids), unpruned."""
    directed = isinstance(g, Digraph)
    sets = [frozenset(a) for a in g.arcs] if directed else g.edge_sets
    inc = g.out_arcs if directed else g.incidence

    def grow(path: list[int], used: set[int], entry):
        yield tuple(path)
        e = path[-1]
        outs = [g.arcs[e][1]] if directed else [v for v in g.edges[e] if v != entry]
        for v in outs:
            for f in inc[v]:
                if lab[f] > lab[e] and not ((sets[f] - {v}) & used):
                    yield from grow(path + [f], used | sets[f], v)

    for e in range(g.m):
        yield from grow([e], set(sets[e]), None)


# ---------------------------------------------------------------------------
# Hypergraph paths under vertex labelings
# ---------------------------------------------------------------------------


def loose_path_search(h: Hypergraph, lab: Labeling, target: int = 1,
                      budget: SearchBudget | None = None,
                      stats: dict | None = None) -> IncreasingWitness | None:
    """Longest loose path whose full vertex sequence increases; ``None`` when
    it has fewer than ``target`` edges.

    Sorting every edge by label turns the problem into a longest path in a
    DAG: edge ``e`` may be followed by ``f`` exactly when the largest vertex
    of ``e`` is the smallest vertex of ``f``.  Strictly increasing labels
    already force distinct vertices, so the search is exact and polynomial.
    """
    _need(lab, h.n, VERTICES, "loose path search")
    ticker = _Ticker(budget)
    windows = [tuple(sorted(e, key=lab.__getitem__)) for e in h.edges]
    starting: dict[int, list[int]] = {}
    for i, w in enumerate(windows):
        starting.setdefault(w[0], []).append(i)
    best = [0] * h.m
    nxt = [-1] * h.m
    for i in sorted(range(h.m), key=lambda i: lab[windows[i][0]], reverse=True):
        ticker.tick()
        best[i] = 1
        for j in starting.get(windows[i][-1], ()):
            if best[j] + 1 > best[i] or (best[j] + 1 == best[i] and j < nxt[i]):
                best[i], nxt[i] = best[j] + 1, j
    if stats is not None:
        stats.update(nodes=ticker.nodes, exhaustive=True)
    if not h.m:
        return None
    start = max(range(h.m), key=lambda i: (best[i], -i))
    if best[start] < target:
        return None
    edges = [start]
    while nxt[edges[-1]] >= 0:
        edges.append(nxt[edges[-1]])
    verts = list(windows[edges[0]])
    for e in edges[1:]:
        verts.extend(windows[e][1:])
    return IncreasingWitness(WitnessKind.LOOSE_PATH, tuple(verts), tuple(edges))


def skip_increasing_search(h: Hypergraph, lab: Labeling, target: int = 1,
                           budget: SearchBudget | None = None,
                           stats: dict | None = None) -> IncreasingWitness | None:
    """Loose path with increasing pivots ``v_0 < v_1 < ...``, ``{v_i, v_{i+1}}``
    inside edge ``i``.  Returns the longest found, or ``None`` below ``target``."""
    _need(lab, h.n, VERTICES, "skip-increasing search")
    ticker = _Ticker(budget)
    # pivot DAG: u -> w when they share an edge and w is larger
    pivot_best, _ = _dp_paths(h.n, h.adjacency.__getitem__, lab)
    best_edges: list[int] = []
    best_pivots: list[int] = []
    edges: list[int] = []
    pivots: list[int] = []
    used: set[int] = set()

    def dfs(e: int, p: int):
        nonlocal best_edges, best_pivots
        if ticker.tick():
            raise _Stop
        ups = [u for u in h.edges[e] if u != p and lab[u] > lab[p]]
        if not ups:
            return
        if len(edges) > len(best_edges):
            best_edges = list(edges)
            best_pivots = pivots + [min(ups, key=lab.__getitem__)]
        # every further edge needs a strictly larger pivot
        if len(edges) + pivot_best[p] - 1 <= len(best_edges):
            return
        for u in sorted(ups, key=lab.__getitem__):
            for f in h.incidence[u]:
                if f == e:
                    continue
                fresh = h.edge_sets[f] - {u}
                if fresh & used:
                    continue
                used.update(fresh)
                edges.append(f)
                pivots.append(u)
                dfs(f, u)
                pivots.pop()
                edges.pop()
                used.difference_update(fresh)

    try:
        for e in range(h.m):
            p = min(h.edges[e], key=lab.__getitem__)
            used.update(h.edge_sets[e])
            edges.append(e)
            pivots.append(p)
            dfs(e, p)
            pivots.pop()
            edges.pop()
            used.difference_update(h.edge_sets[e])
    except _Stop:
        pass
    if stats is not None:
        stats.update(nodes=ticker.nodes, exhaustive=not ticker.hit)
    witness = None
    if best_edges and len(best_edges) >= target:
        witness = IncreasingWitness(WitnessKind.SKIP_INCREASING_PATH, tuple(best_pivots), tuple(best_edges))
    if ticker.hit and ticker.budget.exact:
        raise BudgetExhausted("skip-increasing search: budget exhausted", witness)
    return witness


# ---------------------------------------------------------------------------
# Branching trees
# ---------------------------------------------------------------------------


def _extendable(h: Hypergraph, lab: Labeling, depth: int, vertex_labels: bool) -> list[list[bool]]:
    """``ext[r][v]``: necessary condition for ``v`` to root ``r`` more levels."""
    ext = [[True] * h.n]
    for r in range(1, depth + 1):
        prev = ext[-1]
        cur = [False] * h.n
        for v in range(h.n):
            if not vertex_labels and h.degree(v) < 2 and r < depth:
                continue
            for e in h.incidence[v]:
                others = [u for u in h.edges[e] if u != v]
                if all(prev[u] for u in others) and (not vertex_labels or all(lab[u] > lab[v] for u in others)):
                    cur[v] = True
                    break
        ext.append(cur)
    return ext


def iter_branching_trees(h: Hypergraph, lab: Labeling, depth: int,
                         budget: SearchBudget | None = None,
                         _ticker: _Ticker | None = None) -> Iterator[IncreasingWitness]:
    """Every increasing ``(k-1)``-branching tree of the given depth.

    Levels are built one at a time.  With a vertex labeling every new vertex
    must exceed the largest label of the previous level; with an edge
    labeling every new edge must exceed the largest edge label of the
    previous level.
    """
    if depth < 1:
        raise ParameterError("branching tree depth must be >= 1")
    vertex_labels = lab.target == VERTICES
    _need(lab, h.n if vertex_labels else h.m, lab.target, "branching tree search")
    ticker = _ticker or _Ticker(budget)
    ext = _extendable(h, lab, depth, vertex_labels)

    def top_of(e: int, x: int) -> int:
        return max(lab[u] for u in h.edges[e] if u != x) if vertex_labels else lab[e]

    # cheapest edges first keeps the floor low, so witnesses turn up early
    inc = [sorted(h.incidence[x], key=lambda e, x=x: (top_of(e, x), e)) for x in range(h.n)]

    def level_ok(e: int, x: int, floor: int, remaining: int) -> bool:
        others = [u for u in h.edges[e] if u != x]
        if vertex_labels:
            if any(lab[u] <= floor for u in others):
                return False
        elif lab[e] <= floor:
            return False
        return all(ext[remaining][u] for u in others)

    def expand(levels: list[list[int]], tree_edges: list[int], used: set[int], floor: int):
        t = len(levels) - 1  # deepest level built
        if t == depth:
            verts, lv = [], []
            for i, layer in enumerate(levels):
                verts += layer
                lv += [i] * len(layer)
            yield IncreasingWitness(WitnessKind.BRANCHING_TREE, tuple(verts), tuple(tree_edges), tuple(lv))
            return
        frontier = levels[-1]
        remaining = depth - t - 1

        def assign(i: int, chosen: list[int], new: list[int], hi: int):
            if ticker.tick():
                raise _Stop
            if i == len(frontier):
                yield from expand(levels + [new], tree_edges + chosen, used, hi)
                return
            x = frontier[i]
            for e in inc[x]:
                if not level_ok(e, x, floor, remaining):
                    continue
                fresh = [u for u in h.edges[e] if u != x]
                if any(u in used for u in fresh):
                    continue
                used.update(fresh)
                yield from assign(i + 1, chosen + [e], new + fresh, max(hi, top_of(e, x)))
                used.difference_update(fresh)

        yield from assign(0, [], [], floor)

    roots = sorted(range(h.n), key=lab.__getitem__) if vertex_labels else range(h.n)
    for r in roots:
        for e in inc[r]:
            others = [u for u in h.edges[e] if u != r]
            if vertex_labels and any(lab[u] <= lab[r] for u in others):
                continue
            if not all(ext[depth - 1][u] for u in others):
                continue
            used = set(h.edges[e])
            hi = max(lab[u] for u in others) if vertex_labels else lab[e]
            yield from expand([[r], others], [e], used, hi)


def branching_tree_search(h: Hypergraph, lab: Labeling, depth: int,
                          budget: SearchBudget | None = None,
                          stats: dict | None = None) -> IncreasingWitness | None:
    """First increasing branching tree of the given depth, or ``None``."""
    ticker = _Ticker(budget)
    found = None
    try:
        for w in iter_branching_trees(h, lab, depth, _ticker=ticker):
            found = w
            break
    except _Stop:
        pass
    return _finish(ticker, found, "branching tree search", stats)


@dataclass(frozen=True)
class GreedyTreeResult:
    witness: IncreasingWitness | None
    levels_built: int
    stuck: tuple[int, ...] = ()


def greedy_tree_extend(h: Hypergraph, lab: Labeling, core: Iterable[int], depth: int) -> GreedyTreeResult:
    """Build an increasing branching tree inside ``core`` level by level,
    always taking the cheapest admissible edge."""
    core = set(core)
    vertex_labels = lab.target == VERTICES
    inside = [e for e in range(h.m) if h.edge_sets[e] <= core]
    if not inside:
        return GreedyTreeResult(None, 0, ())

    def cost(e):
        return lab[e] if not vertex_labels else max(lab[u] for u in h.edges[e])

    root_edge = min(inside, key=lambda e: (cost(e), e))
    if vertex_labels:
        root = min(h.edges[root_edge], key=lab.__getitem__)
    else:
        root = min(h.edges[root_edge])
    levels = [[root], [u for u in h.edges[root_edge] if u != root]]
    tree_edges = [root_edge]
    used = set(h.edges[root_edge])
    floor = cost(root_edge)
    for _ in range(1, depth):
        new: list[int] = []
        top = floor
        for x in sorted(levels[-1], key=lab.__getitem__ if vertex_labels else int):
            options = []
            for e in h.incidence[x]:
                if not h.edge_sets[e] <= core:
                    continue
                fresh = [u for u in h.edges[e] if u != x]
                if any(u in used for u in fresh):
                    continue
                if vertex_labels and any(lab[u] <= floor for u in fresh):
                    continue
                if not vertex_labels and lab[e] <= floor:
                    continue
                options.append(e)
            if not options:
                return GreedyTreeResult(None, len(levels) - 1, tuple(levels[-1]))
            if vertex_labels:
                e = min(options, key=lambda e: (max(lab[u] for u in h.edges[e] if u != x), e))
            else:
                e = min(options, key=lambda e: (lab[e], e))
            fresh = [u for u in h.edges[e] if u != x]
            used.update(fresh)
            new += fresh
            tree_edges.append(e)
            top = max(top, cost(e) if not vertex_labels else max(lab[u] for u in fresh))
        levels.append(new)
        floor = top
    verts, lv = [], []
    for i, layer in enumerate(levels):
        verts += layer
        lv += [i] * len(layer)
    w = IncreasingWitness(WitnessKind.BRANCHING_TREE, tuple(verts), tuple(tree_edges), tuple(lv))
    return GreedyTreeResult(w, depth, ())


def greedy_c2_edge_path(h: Hypergraph, lab: Labeling, core: Iterable[int],
                        max_len: int | None = None) -> IncreasingWitness:
    """Greedy increasing loose edge path staying in edges that meet ``core``
    twice: each step leaves through a fresh core vertex on the cheapest
    larger-labelled edge."""
    core = set(core)
    _need(lab, h.m, EDGES, "greedy edge path")
    heavy = [e for e in range(h.m) if len(h.edge_sets[e] & core) >= 2]
    if not heavy:
        return IncreasingWitness(WitnessKind.EDGE_PATH, (), ())
    path = [min(heavy, key=lab.__getitem__)]
    used = set(h.edges[path[0]])
    entry: int | None = None
    while max_len is None or len(path) < max_len:
        last = path[-1]
        best = None
        for v in sorted(h.edge_sets[last] & core):
            if v == entry:
                continue
            for f in h.incidence[v]:
                if lab[f] <= lab[last] or len(h.edge_sets[f] & core) < 2:
                    continue
                if (h.edge_sets[f] - {v}) & used:
                    continue
                # the next step needs a core vertex other than v in f
                if best is None or lab[f] < lab[best[0]]:
                    best = (f, v)
        if best is None:
            break
        f, v = best
        path.append(f)
        used.update(h.edges[f])
        entry = v
    return _edge_witness(h, path, False)


# ---------------------------------------------------------------------------
# Two-sided paths
# ---------------------------------------------------------------------------


def two_sided_search(g: Hypergraph | Digraph, lab: Labeling, min_neg: int = 1,
                     min_pos: int = 1) -> IncreasingWitness | None:
    """Increasing path with at least ``min_neg`` negative and ``min_pos``
    non-negative labels, or ``None``.  Exact.

    An increasing path changes sign once, across one edge ``u -> v`` with
    ``lab[u] < 0 <= lab[v]``; the best path through that edge joins the
    longest decreasing walk back from ``u`` and the longest increasing walk
    forward from ``v``, which are vertex-disjoint by sign.
    """
    _need(lab, g.n, VERTICES, "two-sided search")
    directed = isinstance(g, Digraph)
    min_neg, min_pos = max(1, min_neg), max(1, min_pos)
    fwd = g.succ.__getitem__ if directed else g.adjacency.__getitem__
    back = g.pred.__getitem__ if directed else g.adjacency.__getitem__
    up, up_next = _dp_paths(g.n, fwd, lab)
    down, down_next = _dp_down(g.n, back, lab)
    pairs = g.arcs if directed else [p for u, v in g.edges for p in ((u, v), (v, u))]
    best = None
    for u, v in pairs:
        if lab[u] < 0 <= lab[v] and down[u] >= min_neg and up[v] >= min_pos:
            score = (down[u] + up[v], -lab[u], lab[v])
            if best is None or score > best[0]:
                best = (score, u, v)
    if best is None:
        return None
    _, u, v = best
    left = _walk(u, down_next)[::-1]
    right = _walk(v, up_next)
    path = left + right
    return IncreasingWitness(WitnessKind.TWO_SIDED_PATH, tuple(path), tuple(_path_edges(g, path)),
                             directed=directed, meta={"negatives": len(left), "nonnegatives": len(right)})


two_sided_search_d = two_sided_search


def _dp_down(n: int, back, lab: Labeling):
    """Longest path ending at each vertex through smaller labels."""
    best = [0] * n
    prv = [-1] * n
    for v in sorted(range(n), key=lab.__getitem__):
        b, arg = 0, -1
        for u in back(v):
            if lab[u] < lab[v] and (best[u] > b or (best[u] == b and 0 <= u < arg)):
                b, arg = best[u], u
        best[v] = 1 + b
        prv[v] = arg
    return best, prv


def two_sided_forward(g: Hypergraph | Digraph, lab: Labeling, d: int) -> IncreasingWitness | None:
    """Two-sided path through the cores of the sign classes.

    ``V1``/``V2`` are the non-negative/negative vertices.  When an edge (or
    an arc from ``W2`` into ``W1``) joins the two cores, walk increasing
    inside ``W1`` and decreasing inside ``W2`` from the best such edge.
    """
    _need(lab, g.n, VERTICES, "two-sided builder")
    directed = isinstance(g, Digraph)
    v1 = [v for v in range(g.n) if lab[v] >= 0]
    v2 = [v for v in range(g.n) if lab[v] < 0]
    check = (directed_paired_core_check if directed else paired_core_check)(g, v1, v2, d)
    if not check.found:
        return None
    w1, w2 = set(check.w1), set(check.w2)
    fwd = g.succ.__getitem__ if directed else g.adjacency.__getitem__
    back = g.pred.__getitem__ if directed else g.adjacency.__getitem__
    up, up_next = _dp_paths(g.n, fwd, lab, w1)
    down, down_prev = _dp_down_within(g.n, back, lab, w2)
    pairs = g.arcs if directed else [p for u, v in g.edges for p in ((u, v), (v, u))]
    best = None
    for u, v in pairs:
        if u in w2 and v in w1:
            score = (min(down[u], up[v]), down[u] + up[v])
            if best is None or score > best[0]:
                best = (score, u, v)
    _, u, v = best
    path = _walk(u, down_prev)[::-1] + _walk(v, up_next)
    return IncreasingWitness(WitnessKind.TWO_SIDED_PATH, tuple(path), tuple(_path_edges(g, path)),
                             directed=directed, meta={"negatives": down[u], "nonnegatives": up[v]})


def _dp_down_within(n: int, back, lab: Labeling, members: set[int]):
    best = [0] * n
    prv = [-1] * n
    for v in sorted(members, key=lab.__getitem__):
        b, arg = 0, -1
        for u in back(v):
            if u in members and lab[u] < lab[v] and (best[u] > b or (best[u] == b and 0 <= u < arg)):
                b, arg = best[u], u
        best[v] = 1 + b
        prv[v] = arg
    return best, prv


# ---------------------------------------------------------------------------
# Adversarial minimisation over labelings
# ---------------------------------------------------------------------------

VERTEX_CAP = 9
EDGE_CAP = 8


@dataclass(frozen=True)
class AdversarialResult:
    """``value`` is the minimum (exact) or an upper bound on it (anneal)."""

    value: int
    labeling: Labeling
    exact: bool
    evaluations: int = 0
    meta: dict = field(default_factory=dict, compare=False)


def _automorphism_orbits(g) -> list[int]:
    """Representatives of the vertex orbits under the automorphism group."""
    import networkx as nx
    from networkx.algorithms import isomorphism

    if isinstance(g, Digraph):
        G = nx.DiGraph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.arcs)
        matcher = isomorphism.DiGraphMatcher(G, G)
    else:
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges)
        matcher = isomorphism.GraphMatcher(G, G)
    orbit = list(range(g.n))

    def find(x):
        while orbit[x] != x:
            orbit[x] = orbit[orbit[x]]
            x = orbit[x]
        return x

    for mapping in matcher.isomorphisms_iter():
        for a, b in mapping.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                orbit[max(ra, rb)] = min(ra, rb)
    return sorted({find(v) for v in range(g.n)})


def _vertex_value(g, seq: Sequence[int]) -> int:
    lab = Labeling.from_sequence(seq, VERTICES)
    return len(longest_increasing_vertex_path(g, lab).vertices) if g.n else 0


def _edge_value(g, seq: Sequence[int]) -> int:
    lab = Labeling.from_sequence(seq, EDGES)
    return longest_increasing_edge_path(g, lab, UNLIMITED).length if g.m else 0


def adversarial_min(g: Hypergraph | Digraph, kind: str = "vertex-path", mode: str = "exact",
                    budget: SearchBudget | None = None, seed: int = 0,
                    restarts: int = 8, steps: int = 400) -> AdversarialResult:
    """Minimum over labelings of the longest increasing path.

    ``kind`` is ``vertex-path`` or ``edge-path``.  Exact mode enumerates label
    orders lowest label first, pruning any prefix whose longest increasing
    path already reaches the best value, and fixes the first vertex to an
    orbit representative.  Anneal mode is a seeded random-restart local
    search over transpositions and only yields an upper bound.
    """
    if kind not in ("vertex-path", "edge-path"):
        raise ParameterError(f"unknown structure kind {kind!r}")
    if mode not in ("exact", "anneal"):
        raise ParameterError(f"unknown mode {mode!r}")
    size = g.n if kind == "vertex-path" else g.m
    if mode == "exact":
        if kind == "vertex-path" and g.n > VERTEX_CAP:
            raise DomainError(f"exact mode refused: {g.n} vertices exceeds {VERTEX_CAP}")
        if kind == "edge-path" and g.m > EDGE_CAP:
            raise DomainError(f"exact mode refused: {g.m} edges exceeds {EDGE_CAP}")
        fn = _exact_vertex if kind == "vertex-path" else _exact_edge
        return fn(g, _Ticker(budget))
    value_of = _vertex_value if kind == "vertex-path" else _edge_value
    target = VERTICES if kind == "vertex-path" else EDGES
    rng = random.Random(seed)
    best_seq = list(range(size))
    best_val = value_of(g, best_seq) if size else 0
    evals = 1
    for _ in range(restarts):
        seq = list(range(size))
        rng.shuffle(seq)
        val = value_of(g, seq) if size else 0
        evals += 1
        temp = 1.0
        for step in range(steps if size > 1 else 0):
            i, j = rng.sample(range(size), 2)
            seq[i], seq[j] = seq[j], seq[i]
            new = value_of(g, seq)
            evals += 1
            if new <= val or rng.random() < math.exp((val - new) / max(temp, 1e-9)):
                val = new
            else:
                seq[i], seq[j] = seq[j], seq[i]
            if val < best_val:
                best_val, best_seq = val, list(seq)
            temp *= 0.99
    return AdversarialResult(best_val, Labeling.from_sequence(best_seq, target), False, evals,
                             {"seed": seed, "restarts": restarts, "steps": steps})


def _exact_vertex(g, ticker: _Ticker) -> AdversarialResult:
    n = g.n
    if n == 0:
        return AdversarialResult(0, Labeling((), VERTICES), True, 0)
    back = g.pred if isinstance(g, Digraph) else g.adjacency
    # greedy upper bound from the smallest-last idea: any order works
    best_seq = list(range(n))
    best_val = _vertex_value(g, best_seq)
    ends = [0] * n
    placed = [False] * n
    seq: list[int] = []
    reps = set(_automorphism_orbits(g))

    def place(cur_max: int):
        nonlocal best_val, best_seq
        if ticker.tick():
            raise _Stop
        if len(seq) == n:
            if cur_max < best_val:
                best_val, best_seq = cur_max, list(seq)
            return
        for v in range(n):
            if placed[v] or (not seq and v not in reps):
                continue
            e = 1 + max((ends[u] for u in back[v] if placed[u]), default=0)
            m = max(cur_max, e)
            if m >= best_val:
                continue
            placed[v] = True
            ends[v] = e
            seq.append(v)
            place(m)
            seq.pop()
            placed[v] = False
            ends[v] = 0

    try:
        place(0)
    except _Stop:
        pass
    lab = Labeling.from_sequence(best_seq, VERTICES)
    if ticker.hit:
        if ticker.budget.exact:
            raise BudgetExhausted("adversarial search: budget exhausted", best_val)
        return AdversarialResult(best_val, lab, False, ticker.nodes)
    return AdversarialResult(best_val, lab, True, ticker.nodes)


def _exact_edge(g, ticker: _Ticker) -> AdversarialResult:
    m = g.m
    if m == 0:
        return AdversarialResult(0, Labeling((), EDGES), True, 0)
    directed = isinstance(g, Digraph)
    sets = [frozenset(a) for a in g.arcs] if directed else list(g.edge_sets)
    best_seq = list(range(m))
    best_val = _edge_value(g, best_seq)
    rank = [0] * m  # 0 = unplaced, else position + 1
    seq: list[int] = []

    def longest_ending(e: int) -> int:
        """Longest increasing path among placed edges that ends with ``e``."""
        best = 1

        def back(f: int, used: set[int], exit_v, length: int):
            nonlocal best
            best = max(best, length)
            if directed:
                tails = [g.arcs[f][0]]
            else:
                tails = [v for v in g.edges[f] if v != exit_v]
            for v in tails:
                cands = g.in_arcs[v] if directed else g.incidence[v]
                for p in cands:
                    if p == f or not rank[p] or rank[p] >= rank[f]:
                        continue
                    fresh = sets[p] - {v}
                    if fresh & used:
                        continue
                    back(p, used | fresh, v, length + 1)

        back(e, set(sets[e]), None, 1)
        return best

    def place(cur_max: int):
        nonlocal best_val, best_seq
        if ticker.tick():
            raise _Stop
        if len(seq) == m:
            if cur_max < best_val:
                best_val, best_seq = cur_max, list(seq)
            return
        for e in range(m):
            if rank[e]:
                continue
            rank[e] = len(seq) + 1
            seq.append(e)
            val = max(cur_max, longest_ending(e))
            if val < best_val:
                place(val)
            seq.pop()
            rank[e] = 0

    try:
        place(0)
    except _Stop:
        pass
    lab = Labeling.from_sequence(best_seq, EDGES)
    if ticker.hit:
        if ticker.budget.exact:
            raise BudgetExhausted("adversarial search: budget exhausted", best_val)
        return AdversarialResult(best_val, lab, False, ticker.nodes)
    return AdversarialResult(best_val, lab, True, ticker.nodes)


__all__ = [
    "SearchBudget", "UNLIMITED", "longest_path_from", "longest_increasing_vertex_path",
    "longest_increasing_vertex_path_d", "longest_increasing_edge_trail", "longest_increasing_edge_path",
    "longest_increasing_edge_path_d", "iter_increasing_edge_paths", "loose_path_search",
    "skip_increasing_search", "iter_branching_trees", "branching_tree_search", "greedy_tree_extend",
    "GreedyTreeResult", "greedy_c2_edge_path", "two_sided_search", "two_sided_search_d",
    "two_sided_forward", "adversarial_min", "AdversarialResult",
]
