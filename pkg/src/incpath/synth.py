"""Adversarial labeling constructions.

Every construction returns its labeling (or ordering) together with the
intermediate objects needed to audit it, so the tests can re-check each
intermediate claim on the produced data instead of trusting the builder.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (EDGES, VERTICES, Digraph, DomainError, Hypergraph, Labeling,
                   Ordering, Partition, Refusal, partition_violations, validate)
from .peeling import directed_paired_core_check, paired_core_check

# ---------------------------------------------------------------------------
# Block-alternating edge labelings
# ---------------------------------------------------------------------------


def alternating_block_sequence(count: int) -> list[int]:
    """Block indices ``1..count`` in the order ``1, 3, 2, 5, 4, 7, 6, ...``."""
    if count <= 0:
        return []
    out = [1]
    i = 1
    while 2 * i <= count:
        if 2 * i + 1 <= count:
            out.append(2 * i + 1)
        out.append(2 * i)
        i += 1
    return out


def _distance_blocks(sets: Sequence[frozenset[int]], ids: list[int], seed: int) -> list[list[int]]:
    """BFS blocks of the line graph restricted to ``ids`` starting at ``seed``."""
    by_vertex: dict[int, list[int]] = {}
    for e in ids:
        for v in sets[e]:
            by_vertex.setdefault(v, []).append(e)
    dist = {seed: 0}
    queue = deque([seed])
    while queue:
        e = queue.popleft()
        for v in sets[e]:
            for f in by_vertex[v]:
                if f not in dist:
                    dist[f] = dist[e] + 1
                    queue.append(f)
    blocks: list[list[int]] = [[] for _ in range(max(dist.values()) + 1)]
    for e in sorted(dist):
        blocks[dist[e]].append(e)
    return blocks


@dataclass(frozen=True)
class BlockAlternatingResult:
    """``components`` lists, per connected component in label order, its
    distance blocks ``E_1, E_2, ...`` (edge ids, 0-based list)."""

    labeling: Labeling
    components: tuple[tuple[tuple[int, ...], ...], ...]
    seed: int

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Distance blocks of the seed component."""
        return self.components[-1]

    def block_of(self) -> dict[int, tuple[int, int]]:
        """edge id -> (component index, 1-based block index)."""
        out = {}
        for c, comp in enumerate(self.components):
            for b, block in enumerate(comp, start=1):
                for e in block:
                    out[e] = (c, b)
        return out

    def window_bound(self) -> int:
        """Largest total size of three consecutive blocks in one component."""
        best = 0
        for comp in self.components:
            sizes = [len(b) for b in comp]
            for i in range(len(sizes)):
                best = max(best, sum(sizes[i:i + 3]))
        return best


def _alternating_order(sets: Sequence[frozenset[int]], ids: Sequence[int], seed: int):
    """Edge ids of ``ids`` in label order plus the per-component blocks."""
    remaining = set(ids)
    comps: list[list[list[int]]] = []
    seed_blocks = _distance_blocks(sets, sorted(remaining), seed)
    for b in seed_blocks:
        remaining.difference_update(b)
    while remaining:
        s = min(remaining)
        blocks = _distance_blocks(sets, sorted(remaining), s)
        for b in blocks:
            remaining.difference_update(b)
        comps.append(blocks)
    comps.append(seed_blocks)  # seed component sits above all others
    order: list[int] = []
    for blocks in comps:
        for b in alternating_block_sequence(len(blocks)):
            order.extend(blocks[b - 1])
    return order, comps


def block_alternating(h: Hypergraph | Digraph, seed_edge: int) -> BlockAlternatingResult:
    """Edge labeling by line-graph distance blocks from ``seed_edge``.

    Works on hypergraph edges and on digraph arcs (incidence ignores
    direction).  Components not containing the seed are labeled below it.
    """
    sets = _edge_sets(h)
    if not 0 <= seed_edge < len(sets):
        raise DomainError(f"seed edge {seed_edge} is not an edge")
    order, comps = _alternating_order(sets, range(len(sets)), seed_edge)
    lab = Labeling.from_sequence(order, EDGES)
    return BlockAlternatingResult(lab, tuple(tuple(tuple(b) for b in c) for c in comps), seed_edge)


def _edge_sets(h) -> tuple[frozenset[int], ...]:
    if isinstance(h, Digraph):
        return tuple(frozenset(a) for a in h.arcs)
    return h.edge_sets


# ---------------------------------------------------------------------------
# Star reduction
# ---------------------------------------------------------------------------


def star_reduction(h: Hypergraph, prec: Ordering) -> Hypergraph:
    """Replace each edge by the star from its ``prec``-least vertex."""
    if len(prec) != h.n:
        raise DomainError("ordering does not cover the vertex set")
    seen: dict[frozenset[int], None] = {}
    for e in h.edges:
        centre = prec.min_of(e)
        for u in e:
            if u != centre:
                seen.setdefault(frozenset((centre, u)), None)
    return Hypergraph(2, h.n, tuple(tuple(sorted(p)) for p in seen), h.names)


# ---------------------------------------------------------------------------
# Type I / type II split for simple hypergraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeExtrema:
    ell: int       # least vertex in the base order
    s: int         # second least vertex in the base order
    max_prec: int  # largest vertex in the well-ordering


def edge_extrema(edge: Iterable[int], base: Ordering, prec: Ordering) -> EdgeExtrema:
    ordered = sorted(edge, key=base.key)
    return EdgeExtrema(ordered[0], ordered[1], prec.max_of(ordered))


@dataclass(frozen=True)
class TypeSplitResult:
    labeling: Labeling            # the merged labeling gamma
    type_one: tuple[int, ...]     # E_I in gamma order
    type_two: tuple[int, ...]     # E_II in gamma order
    extrema: tuple[EdgeExtrema, ...]
    blocks: BlockAlternatingResult | None  # phi on (V, E_I), ids of the sub-hypergraph

    def is_type_two(self, e: int) -> bool:
        return self.extrema[e].ell == self.extrema[e].max_prec


def type_split_hyperedge(h: Hypergraph, base: Ordering, prec: Ordering) -> TypeSplitResult:
    """Split edges by whether the base-least vertex is the ``prec``-maximum,
    label each class and stack the type I labels below the type II labels."""
    problems = validate(h, require_simple=True)
    if problems:
        raise DomainError("type split needs a simple hypergraph: " + "; ".join(problems))
    if len(base) != h.n or len(prec) != h.n:
        raise DomainError("orderings must cover the vertex set")
    ext = tuple(edge_extrema(e, base, prec) for e in h.edges)
    one = [e for e in range(h.m) if ext[e].ell != ext[e].max_prec]
    two = [e for e in range(h.m) if ext[e].ell == ext[e].max_prec]
    blocks = None
    one_order: list[int] = []
    if one:
        sub = h.with_edges([h.edges[e] for e in one])
        blocks = block_alternating(sub, 0)
        one_order = [one[i] for i in blocks.labeling.sequence]
    # s ascending in the base order, then ell descending in prec
    two_order = sorted(two, key=lambda e: (base.key(ext[e].s), -prec.key(ext[e].ell), e))
    lab = Labeling.from_sequence(one_order + two_order, EDGES)
    return TypeSplitResult(lab, tuple(one_order), tuple(two_order), ext, blocks)


def descent_case(result: TypeSplitResult, prev: int, nxt: int, h: Hypergraph) -> int | None:
    """Which of the five junction cases applies to consecutive type II edges.

    Returns 1..5 when the shared vertex is ``ell`` or ``s`` of ``prev``
    and ``None`` otherwise.
    """
    shared = h.edge_sets[prev] & h.edge_sets[nxt]
    if len(shared) != 1:
        return None
    (v,) = shared
    a, b = result.extrema[prev], result.extrema[nxt]
    if v == a.ell:
        return 1 if v == b.ell else 2
    if v == a.s:
        if v == b.ell:
            return 3
        if v == b.s:
            return 4
        return 5
    return None


# ---------------------------------------------------------------------------
# Vertex labelings from ordered independent partitions
# ---------------------------------------------------------------------------


def chi_star_labeling(g: Hypergraph, partition: Partition) -> Labeling:
    """Label so every vertex sits above its neighbours in earlier blocks.

    Vertices are emitted in a topological order of the orientation
    "earlier block -> later block", smallest id first among the ready ones.
    """
    if partition.n != g.n:
        raise DomainError("partition does not cover the vertex set")
    h = partition.block_of
    for i, block in enumerate(partition.blocks, start=1):
        for v in block:
            clash = g.adjacency[v] & block
            if clash:
                raise DomainError(f"block {i} is not independent: {v} ~ {min(clash)}")
    indeg = [sum(1 for u in g.adjacency[v] if h[u] < h[v]) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for u in g.adjacency[v]:
            if h[u] > h[v]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    heapq.heappush(ready, u)
    return Labeling.from_sequence(order, VERTICES)


def smallest_last_coloring(g: Hypergraph, within: Iterable[int] | None = None) -> list[int]:
    """Greedy colouring in smallest-last order; ``0`` for vertices outside
    ``within``.  Uses at most degeneracy + 1 colours."""
    alive = set(range(g.n)) if within is None else set(within)
    deg = {v: len(g.adjacency[v] & alive) for v in alive}
    order = []
    left = set(alive)
    while left:
        v = min(left, key=lambda x: (deg[x], x))
        order.append(v)
        left.discard(v)
        for u in g.adjacency[v]:
            if u in left:
                deg[u] -= 1
    colour = [0] * g.n
    for v in reversed(order):
        used = {colour[u] for u in g.adjacency[v] if u in alive}
        c = 1
        while c in used:
            c += 1
        colour[v] = c
    return colour


def acyclic_classes(dg: Digraph, within: Iterable[int] | None = None) -> list[int]:
    """Greedy partition of ``within`` into classes inducing acyclic digraphs.

    Vertices are processed in reverse out-peeling order; a vertex joins the
    first class holding none of its out-neighbours processed so far, so
    intra-class arcs always point from earlier to later processed vertices.
    Class ``0`` marks vertices outside ``within``.
    """
    alive = set(range(dg.n)) if within is None else set(within)
    outdeg = {v: len(dg.succ[v] & alive) for v in alive}
    left = set(alive)
    order = []
    while left:
        v = min(left, key=lambda x: (outdeg[x], x))
        order.append(v)
        left.discard(v)
        for u in dg.pred[v]:
            if u in left:
                outdeg[u] -= 1
    cls = [0] * dg.n
    done: set[int] = set()
    for v in reversed(order):
        used = {cls[u] for u in dg.succ[v] if u in done}
        c = 1
        while c in used:
            c += 1
        cls[v] = c
        done.add(v)
    return cls


def acyclic_class_labeling(dg: Digraph, partition: Partition) -> Labeling:
    """Blocks stacked in index order; inside a block arcs go downhill.

    Each block must induce an acyclic digraph; an increasing directed path
    then visits blocks of strictly increasing index.
    """
    if partition.n != dg.n:
        raise DomainError("partition does not cover the vertex set")
    order: list[int] = []
    for i, block in enumerate(partition.blocks, start=1):
        sub, keep = dg.induced(block)
        topo = _topological(sub)
        if topo is None:
            raise DomainError(f"block {i} induces a directed cycle")
        order.extend(keep[v] for v in reversed(topo))
    return Labeling.from_sequence(order, VERTICES)


def _topological(dg: Digraph) -> list[int] | None:
    indeg = [len(dg.pred[v]) for v in range(dg.n)]
    ready = [v for v in range(dg.n) if indeg[v] == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        v = heapq.heappop(ready)
        out.append(v)
        for u in sorted(dg.succ[v]):
            indeg[u] -= 1
            if indeg[u] == 0:
                heapq.heappush(ready, u)
    return out if len(out) == dg.n else None


# ---------------------------------------------------------------------------
# Integer-valued labelings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchingLabeling:
    labeling: Labeling
    matching: tuple[int, ...]


def greedy_matching(sets: Sequence[frozenset[int]]) -> list[int]:
    used: set[int] = set()
    out = []
    for i, e in enumerate(sets):
        if not (e & used):
            out.append(i)
            used |= e
    return out


def z_matching_edge(g: Hypergraph | Digraph) -> MatchingLabeling:
    """Positive labels on a greedy maximal matching, ``<= 0`` elsewhere."""
    sets = _edge_sets(g)
    matching = greedy_matching(sets)
    mset = set(matching)
    rest = [e for e in range(len(sets)) if e not in mset]
    if rest:
        lab = Labeling.from_split(rest[:-1], [rest[-1]] + matching, EDGES, zero_used=True)
    else:
        lab = Labeling.from_split([], matching, EDGES, zero_used=False)
    return MatchingLabeling(lab, tuple(matching))


@dataclass(frozen=True)
class TwoSidedLabeling:
    """Certificate: every increasing path crossing from negative to
    non-negative labels has at most ``bound_pos`` non-negative vertices or at
    most ``bound_neg`` negative ones."""

    labeling: Labeling
    w1: frozenset[int]
    w2: frozenset[int]
    u1: frozenset[int]
    u2: frozenset[int]
    bound_pos: int
    bound_neg: int
    certificate: dict = field(default_factory=dict, compare=False)


def _bipartition(n: int, v1, v2) -> tuple[set[int], set[int]]:
    v1, v2 = set(v1), set(v2)
    problems = partition_violations([v1, v2], n)
    if problems:
        raise DomainError("not a partition: " + "; ".join(problems))
    return v1, v2


def _longest_from(n: int, nbrs, lab_of, members: set[int], up: bool) -> int:
    """Longest label-monotone path (vertices) inside ``members``."""
    best = {}
    for v in sorted(members, key=lab_of, reverse=up):
        nxt = [best[u] for u in nbrs(v) if u in members and u in best
               and ((lab_of(u) > lab_of(v)) if up else (lab_of(u) < lab_of(v)))]
        best[v] = 1 + max(nxt, default=0)
    return max(best.values(), default=0)


def z_two_sided_vertex(g: Hypergraph, v1: Iterable[int], v2: Iterable[int], d: int) -> TwoSidedLabeling:
    """Integer labeling with no long two-sided increasing path.

    ``V1`` receives the non-negative labels and ``V2`` the negative ones.
    Inside ``V1`` the core ``W1`` sits below ``U1``; inside ``V2`` the core
    ``W2`` sits above ``U2``.  ``U1`` and ``U2`` are labeled with bounded
    increasing (resp. decreasing) paths from a smallest-last colouring.
    """
    v1, v2 = _bipartition(g.n, v1, v2)
    check = paired_core_check(g, v1, v2, d)
    if check.found:
        raise Refusal("cores of the two sides are joined by an edge", check.crossing)
    w1, w2 = check.w1, check.w2
    u1, u2 = frozenset(v1 - w1), frozenset(v2 - w2)
    up1 = _chi_star_order(g, u1)
    up2 = _chi_star_order(g, u2)
    pos_seq = sorted(w1) + up1
    neg_seq = list(reversed(up2)) + sorted(w2)
    lab = Labeling.from_split(neg_seq, pos_seq, VERTICES, zero_used=True)
    b1 = _longest_from(g.n, g.adjacency.__getitem__, lab.__getitem__, set(u1), up=True)
    b2 = _longest_from(g.n, g.adjacency.__getitem__, lab.__getitem__, set(u2), up=False)
    cert = {"d": d, "w1": sorted(w1), "w2": sorted(w2), "bound_pos": b1, "bound_neg": b2,
            "colours_u1": max(_colour_count(g, u1), 0), "colours_u2": max(_colour_count(g, u2), 0)}
    return TwoSidedLabeling(lab, w1, w2, u1, u2, b1, b2, cert)


def _colour_count(g: Hypergraph, part) -> int:
    return max((c for v, c in enumerate(smallest_last_coloring(g, part)) if v in part), default=0)


def _chi_star_order(g: Hypergraph, part: frozenset[int]) -> list[int]:
    """``part`` in the label order of a chi-star labeling of ``g[part]``."""
    if not part:
        return []
    sub, keep = g.induced(part)
    colour = smallest_last_coloring(sub)
    lab = chi_star_labeling(sub, Partition.from_assignment(colour))
    return [keep[v] for v in lab.sequence]


def z_two_sided_vertex_directed(dg: Digraph, v1: Iterable[int], v2: Iterable[int],
                                d: int) -> TwoSidedLabeling:
    """Directed counterpart: out-core in ``V1``, in-core in ``V2``, and the
    refusal fires on an arc from ``W2`` into ``W1``."""
    v1, v2 = _bipartition(dg.n, v1, v2)
    check = directed_paired_core_check(dg, v1, v2, d)
    if check.found:
        raise Refusal("an arc leads from the in-core of V2 into the out-core of V1", check.crossing)
    w1, w2 = check.w1, check.w2
    u1, u2 = frozenset(v1 - w1), frozenset(v2 - w2)
    up1 = _acyclic_order(dg, u1)
    # bounded increasing paths in the reversal become bounded paths into v0
    up2 = _acyclic_order(dg.reversed(), u2)
    pos_seq = sorted(w1) + up1
    neg_seq = list(reversed(up2)) + sorted(w2)
    lab = Labeling.from_split(neg_seq, pos_seq, VERTICES, zero_used=True)
    b1 = _longest_from(dg.n, dg.succ.__getitem__, lab.__getitem__, set(u1), up=True)
    b2 = _longest_from(dg.n, dg.pred.__getitem__, lab.__getitem__, set(u2), up=False)
    cert = {"d": d, "w1": sorted(w1), "w2": sorted(w2), "bound_pos": b1, "bound_neg": b2}
    return TwoSidedLabeling(lab, w1, w2, u1, u2, b1, b2, cert)


def _acyclic_order(dg: Digraph, part: frozenset[int]) -> list[int]:
    if not part:
        return []
    sub, keep = dg.induced(part)
    lab = acyclic_class_labeling(sub, Partition.from_assignment(acyclic_classes(sub)))
    return [keep[v] for v in lab.sequence]


# ---------------------------------------------------------------------------
# Merging per-block orders into one ordering
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MergeState:
    blocks: Partition
    block_orders: tuple[tuple[int, ...], ...]  # members of each block, least first
    arcs: tuple[tuple[int, int], ...]
    Q: tuple[frozenset[int], ...]              # Q_0 = {} ... Q_N = V
    P: tuple[frozenset[int], ...]              # P[0] unused (empty)
    kseq: tuple[int, ...]                      # kseq[0] unused (0)
    order: Ordering

    @property
    def h(self) -> tuple[int, ...]:
        return self.blocks.block_of

    def layer(self) -> list[int]:
        """Least ``i`` with ``x`` in ``Q_i``."""
        out = [0] * self.blocks.n
        for i in range(len(self.Q) - 1, 0, -1):
            for x in self.Q[i]:
                out[x] = i
        return out

    def prec(self, x: int, y: int) -> bool:
        return self.order.less(x, y)

    # audits -------------------------------------------------------------

    def note_violations(self) -> list[str]:
        h = self.h
        out = []
        for i in range(1, len(self.Q)):
            for x in self.Q[i]:
                if h[x] <= self.kseq[i] and x not in self.P[i]:
                    out.append(f"x={x} in Q_{i} with h={h[x]} <= k_{i}={self.kseq[i]} but not in P_{i}")
        return out

    def lemma_violations(self) -> list[str]:
        h = self.h
        out = []
        for x, y in self.arcs:
            for n in range(1, len(self.kseq)):
                if h[x] <= self.kseq[n] < h[y] and not self.prec(y, x):
                    out.append(f"arc ({x},{y}) with h(x)={h[x]} <= k_{n} < h(y)={h[y]} but x not after y")
                    break
        return out

    def claim_violations(self) -> list[str]:
        h = self.h
        out = []
        for i in range(1, len(self.Q)):
            fresh = self.Q[i] - self.Q[i - 1]
            for x in fresh:
                for y in self.Q[i]:
                    if h[x] < h[y] and not self.prec(y, x):
                        out.append(f"x={x} new in Q_{i}, y={y}, h(x)<h(y) but x not after y")
        return out

    def restriction_violations(self) -> list[str]:
        out = []
        for i, seq in enumerate(self.block_orders, start=1):
            for a, b in zip(seq, seq[1:]):
                if not self.prec(a, b):
                    out.append(f"block {i}: {a} before {b} in its own order but not in the merge")
        return out

    def descent_violations(self, limit: int | None = None) -> list[str]:
        """Enumerate all increasing directed paths (in the merged order) that
        avoid ``Q_j`` and start at a vertex with ``h <= k_j``; report every
        step that raises the block index."""
        h = self.h
        succ: dict[int, list[int]] = {}
        for x, y in self.arcs:
            if self.prec(x, y):
                succ.setdefault(x, []).append(y)
        out: list[str] = []
        paths = 0
        for j in range(1, len(self.Q)):
            outside = set(range(self.blocks.n)) - self.Q[j]
            starts = [v for v in sorted(outside) if h[v] <= self.kseq[j]]
            for s in starts:
                stack = [(s, (s,))]
                while stack:
                    v, path = stack.pop()
                    paths += 1
                    if limit is not None and paths > limit:
                        return out
                    for u in succ.get(v, ()):
                        if u in outside and u not in path:
                            if h[u] > h[v]:
                                out.append(f"j={j}: path {list(path) + [u]} climbs from block {h[v]} to {h[u]}")
                            stack.append((u, path + (u,)))
        return out

    def audit(self) -> dict[str, list[str]]:
        return {
            "note": self.note_violations(),
            "lemma": self.lemma_violations(),
            "claim": self.claim_violations(),
            "restriction": self.restriction_violations(),
            "descent": self.descent_violations(),
        }


def _block_sequences(blocks: Partition, per_block) -> list[tuple[int, ...]]:
    seqs = []
    for i, (block, spec) in enumerate(zip(blocks.blocks, per_block), start=1):
        members = sorted(block)
        if isinstance(spec, Ordering):
            if len(spec) != len(members):
                raise DomainError(f"order for block {i} has the wrong size")
            seq = tuple(members[o] for o in spec.sequence)
        else:
            seq = tuple(spec)
            if sorted(seq) != members:
                raise DomainError(f"order for block {i} is not a permutation of the block")
        seqs.append(seq)
    return seqs


def merge_ordering(blocks: Partition, per_block: Sequence, adjacency: Hypergraph | Digraph) -> MergeState:
    """Merge per-block orders into a single ordering by the inductive
    ``Q_n, P_n, k_n`` construction.

    ``per_block[i]`` is either an :class:`Ordering` over the members of block
    ``i+1`` (in increasing id order) or a sequence of those vertex ids, least
    first.  Graph edges count as arcs in both directions.
    """
    n = blocks.n
    if len(per_block) != len(blocks):
        raise DomainError("need one order per block")
    if isinstance(adjacency, Digraph):
        arcs = tuple(adjacency.arcs)
    else:
        if adjacency.k != 2:
            raise DomainError("merge ordering needs a graph or a digraph")
        arcs = tuple(a for u, v in adjacency.edges for a in ((u, v), (v, u)))
    if adjacency.n != n:
        raise DomainError("partition and adjacency disagree on the vertex count")
    seqs = _block_sequences(blocks, per_block)
    h = blocks.block_of
    rank_in_block = [0] * n
    for seq in seqs:
        for r, v in enumerate(seq):
            rank_in_block[v] = r
    up: dict[int, list[int]] = {}
    for x, y in arcs:
        if h[x] < h[y]:
            up.setdefault(x, []).append(y)

    def R(M: set[int]) -> set[int]:
        out = set(M)
        for x in M:
            out.update(up.get(x, ()))
        return out

    def U(M: set[int]) -> set[int]:
        out: set[int] = set()
        top: dict[int, int] = {}
        for x in M:
            top[h[x]] = max(top.get(h[x], -1), rank_in_block[x])
        for b, r in top.items():
            out.update(seqs[b - 1][:r + 1])
        return out

    Q = [frozenset()]
    P = [frozenset()]
    K = [0]
    for v in range(n):
        X = set(Q[-1]) | {v}
        k = max(h[x] for x in R(X))
        cur = X
        for _ in range(k):
            cur = U({x for x in R(cur) if h[x] <= k})
        P.append(frozenset(cur))
        K.append(k)
        Q.append(frozenset(U(R(cur))))
    layer = [0] * n
    for i in range(n, 0, -1):
        for x in Q[i]:
            layer[x] = i
    seq = sorted(range(n), key=lambda x: (layer[x], -h[x], rank_in_block[x]))
    return MergeState(blocks, tuple(seqs), arcs, tuple(Q), tuple(P), tuple(K),
                      Ordering.from_sequence(seq))


# ---------------------------------------------------------------------------
# Digraph edge labeling from a base order and a well-ordering
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DigraphEdgeResult:
    labeling: Labeling
    agree: tuple[int, ...]     # L: arcs whose orders agree, gamma order
    disagree: tuple[int, ...]  # E \ L, gamma order
    groups: dict               # r(e) -> arcs of K_r in gamma order
    base: Ordering
    prec: Ordering

    def ell(self, dg: Digraph, a: int) -> int:
        return self.base.min_of(dg.arcs[a])

    def claim_violations(self, dg: Digraph) -> list[str]:
        """Consecutive arcs of ``E \\ L`` with increasing labels must not raise
        ``ell`` in the well-ordering."""
        rest = set(self.disagree)
        out = []
        for a in rest:
            u, v = dg.arcs[a]
            for b in dg.out_arcs[v]:
                if b in rest and self.labeling[a] < self.labeling[b]:
                    if self.prec.less(self.ell(dg, a), self.ell(dg, b)):
                        out.append(f"arcs {dg.arcs[a]} -> {dg.arcs[b]}: ell climbs in the well-ordering")
        return out

    def return_violations(self, dg: Digraph) -> list[str]:
        """An arc of ``E \\ L`` must never be followed by a larger-labeled arc of ``L``."""
        rest = set(self.disagree)
        agree = set(self.agree)
        out = []
        for a in rest:
            v = dg.arcs[a][1]
            for b in dg.out_arcs[v]:
                if b in agree and self.labeling[a] < self.labeling[b]:
                    out.append(f"arc {dg.arcs[a]} is followed by larger arc {dg.arcs[b]} of L")
        return out


def reiterman_digraph_edge(dg: Digraph, base: Ordering, prec: Ordering) -> DigraphEdgeResult:
    """Arc labeling: block-alternating labels on the arcs where both orders
    agree, then the ``K_i`` groups stacked by larger endpoint."""
    if len(base) != dg.n or len(prec) != dg.n:
        raise DomainError("orderings must cover the vertex set")
    ell = [base.min_of(a) for a in dg.arcs]
    r = [base.max_of(a) for a in dg.arcs]
    agree = [a for a in range(dg.m) if prec.less(ell[a], r[a])]
    rest = [a for a in range(dg.m) if not prec.less(ell[a], r[a])]
    agree_order: list[int] = []
    if agree:
        sets = tuple(frozenset(dg.arcs[a]) for a in range(dg.m))
        agree_order, _ = _alternating_order(sets, agree, agree[0])
    groups: dict[int, list[int]] = {}
    for a in rest:
        groups.setdefault(r[a], []).append(a)
    rest_order: list[int] = []
    ordered_groups = {}
    for top in sorted(groups, key=base.key):
        # inside a group the label decreases as ell climbs in the well-ordering
        members = sorted(groups[top], key=lambda a: (-prec.key(ell[a]), a))
        ordered_groups[top] = tuple(members)
        rest_order.extend(members)
    lab = Labeling.from_sequence(agree_order + rest_order, EDGES)
    return DigraphEdgeResult(lab, tuple(agree_order), tuple(rest_order), ordered_groups, base, prec)


__all__ = [
    "alternating_block_sequence", "block_alternating", "BlockAlternatingResult", "star_reduction",
    "EdgeExtrema", "edge_extrema", "type_split_hyperedge", "TypeSplitResult", "descent_case",
    "chi_star_labeling", "smallest_last_coloring", "acyclic_classes", "acyclic_class_labeling",
    "z_matching_edge", "MatchingLabeling", "greedy_matching", "z_two_sided_vertex",
    "z_two_sided_vertex_directed", "TwoSidedLabeling", "merge_ordering", "MergeState",
    "reiterman_digraph_edge", "DigraphEdgeResult",
]
