"""Shared data types: finite hypergraphs and digraphs, labelings, orderings,
partitions and increasing-structure witnesses.

Vertices and edges are dense integers ``0..n-1`` / ``0..m-1``.  External
identifiers (whatever appears in a JSON file, or names such as ``"i3"`` for
generated families) live in ``names`` and are only consulted for I/O.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence


class ArtifactError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ArtifactError, ValueError):
    """An argument lies outside the domain of an operation."""


class ParameterError(ArtifactError, ValueError):
    """A numeric parameter is out of range."""


class BudgetExhausted(ArtifactError):
    """An exact search ran out of budget before completing.

    ``best`` holds the best structure found so far (possibly ``None``).
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class Refusal(DomainError):
    """A construction's hypothesis fails; ``counterexample`` shows why."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


# ---------------------------------------------------------------------------
# Hypergraphs and digraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A finite k-uniform hypergraph; graphs are the ``k == 2`` case.

    Edges are stored exactly as given so that :func:`validate` can report
    malformed input.  Every other operation assumes a valid hypergraph.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    names: tuple[Hashable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if not self.names:
            object.__setattr__(self, "names", tuple(range(self.n)))
        elif len(self.names) != self.n:
            raise DomainError(f"{len(self.names)} names for {self.n} vertices")

    def _key(self):
        return (self.k, self.n, self.edges, self.names)

    def __eq__(self, other):
        return isinstance(other, Hypergraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[Iterable[Hashable]],
                   vertices: Iterable[Hashable] | None = None) -> "Hypergraph":
        """Build from external ids; vertex order is first appearance."""
        edges = [tuple(e) for e in edges]
        if vertices is None:
            seen: dict = {}
            for e in edges:
                for v in e:
                    seen.setdefault(v, None)
            vertices = list(seen)
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise DomainError("duplicate vertex id")
        try:
            dense = [tuple(index[v] for v in e) for e in edges]
        except KeyError as exc:
            raise DomainError(f"edge endpoint {exc.args[0]!r} not a vertex") from None
        return cls(k, len(vertices), tuple(dense), tuple(vertices))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[v]`` lists the ids of edges containing ``v``."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edge_sets):
            for v in e:
                if 0 <= v < self.n:
                    inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets (vertices sharing an edge)."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edge_sets:
            for v in e:
                adj[v].update(e)
        for v in range(self.n):
            adj[v].discard(v)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[frozenset[int], int]:
        return {e: i for i, e in enumerate(self.edge_sets)}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def has_edge(self, *vs: int) -> bool:
        return frozenset(vs) in self.edge_index

    def induced(self, subset: Iterable[int]) -> tuple["Hypergraph", list[int]]:
        """Induced sub-hypergraph and the map new id -> old id."""
        keep = sorted(set(subset))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [tuple(pos[v] for v in e) for e in self.edges
                 if all(v in pos for v in e)]
        return Hypergraph(self.k, len(keep), tuple(edges),
                          tuple(self.names[v] for v in keep)), keep

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Same vertex set, different edges."""
        return Hypergraph(self.k, self.n, tuple(tuple(e) for e in edges), self.names)


def graph(n: int, edges: Iterable[tuple[int, int]], names: Sequence[Hashable] = ()) -> Hypergraph:
    """Shorthand for a 2-uniform hypergraph on ``0..n-1``."""
    return Hypergraph(2, n, tuple(tuple(e) for e in edges), tuple(names))


@dataclass(frozen=True, eq=False)
class Digraph:
    """A finite digraph without loops or repeated arcs."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    names: tuple[Hashable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(u), int(v)) for u, v in self.arcs))
        if not self.names:
            object.__setattr__(self, "names", tuple(range(self.n)))
        elif len(self.names) != self.n:
            raise DomainError(f"{len(self.names)} names for {self.n} vertices")

    def __eq__(self, other):
        return isinstance(other, Digraph) and (self.n, self.arcs, self.names) == (other.n, other.arcs, other.names)

    def __hash__(self):
        return hash((self.n, self.arcs, self.names))

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[Hashable, Hashable]],
                  vertices: Iterable[Hashable] | None = None) -> "Digraph":
        arcs = [tuple(a) for a in arcs]
        if vertices is None:
            seen: dict = {}
            for a in arcs:
                for v in a:
                    seen.setdefault(v, None)
            vertices = list(seen)
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        try:
            dense = [(index[u], index[v]) for u, v in arcs]
        except KeyError as exc:
            raise DomainError(f"arc endpoint {exc.args[0]!r} not a vertex") from None
        return cls(len(vertices), tuple(dense), tuple(vertices))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, _) in enumerate(self.arcs):
            out[u].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for i, (_, v) in enumerate(self.arcs):
            inn[v].append(i)
        return tuple(tuple(x) for x in inn)

    @cached_property
    def succ(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.arcs[a][1] for a in arcs) for arcs in self.out_arcs)

    @cached_property
    def pred(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(self.arcs[a][0] for a in arcs) for arcs in self.in_arcs)

    @cached_property
    def arc_index(self) -> dict[tuple[int, int], int]:
        return {a: i for i, a in enumerate(self.arcs)}

    def induced(self, subset: Iterable[int]) -> tuple["Digraph", list[int]]:
        keep = sorted(set(subset))
        pos = {v: i for i, v in enumerate(keep)}
        arcs = [(pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos]
        return Digraph(len(keep), tuple(arcs), tuple(self.names[v] for v in keep)), keep

    def reversed(self) -> "Digraph":
        return Digraph(self.n, tuple((v, u) for u, v in self.arcs), self.names)

    def underlying(self) -> Hypergraph:
        """Underlying simple graph (antiparallel arcs collapse)."""
        seen: dict[frozenset[int], None] = {}
        for u, v in self.arcs:
            seen.setdefault(frozenset((u, v)), None)
        return Hypergraph(2, self.n, tuple(tuple(sorted(e)) for e in seen), self.names)


def validate(h: Hypergraph, require_simple: bool = False,
             max_codegree: int | None = None) -> list[str]:
    """Return every invariant violation of ``h`` (empty list when valid).

    ``require_simple`` forbids two edges sharing two or more vertices.
    ``max_codegree`` is the relaxed mode: every vertex pair may lie in at
    most that many edges.
    """
    problems: list[str] = []
    if h.k < 2:
        problems.append(f"uniformity k={h.k} is below 2")
    seen: dict[frozenset[int], int] = {}
    for i, e in enumerate(h.edges):
        bad = [v for v in e if not (isinstance(v, int) and 0 <= v < h.n)]
        if bad:
            problems.append(f"edge {i} {list(e)}: vertices {bad} not in vertex set")
        if len(set(e)) != len(e):
            problems.append(f"edge {i} {list(e)}: repeated vertex")
        elif len(e) != h.k:
            problems.append(f"edge {i} {list(e)}: has {len(e)} vertices, expected {h.k}")
        key = frozenset(e)
        if key in seen:
            problems.append(f"edge {i} {list(e)}: duplicate of edge {seen[key]}")
        else:
            seen[key] = i
    if require_simple or max_codegree is not None:
        pairs: dict[tuple[int, int], list[int]] = defaultdict(list)
        for i, e in enumerate(h.edges):
            for pair in combinations(sorted(set(e)), 2):
                pairs[pair].append(i)
        reported: set[tuple[int, int]] = set()
        for pair, owners in sorted(pairs.items()):
            if require_simple:
                for a, b in combinations(owners, 2):
                    if (a, b) not in reported:
                        reported.add((a, b))
                        shared = sorted(set(h.edges[a]) & set(h.edges[b]))
                        problems.append(f"edges {a} and {b} share {shared}")
            if max_codegree is not None and len(owners) > max_codegree:
                problems.append(f"pair {list(pair)} has co-degree {len(owners)} > {max_codegree}")
    return problems


def validate_digraph(d: Digraph) -> list[str]:
    problems: list[str] = []
    seen: set[tuple[int, int]] = set()
    for i, (u, v) in enumerate(d.arcs):
        if not (0 <= u < d.n and 0 <= v < d.n):
            problems.append(f"arc {i} ({u},{v}): endpoint not in vertex set")
        if u == v:
            problems.append(f"arc {i} ({u},{v}): loop")
        if (u, v) in seen:
            problems.append(f"arc {i} ({u},{v}): duplicate")
        seen.add((u, v))
    return problems


# ---------------------------------------------------------------------------
# Labelings and orderings
# ---------------------------------------------------------------------------

VERTICES = "vertices"
EDGES = "edges"
NAT = "nat"
INT = "int"


@dataclass(frozen=True)
class Labeling:
    """A bijection from objects ``0..m-1`` onto an integer interval.

    ``nat`` labelings use exactly ``1..m``.  ``int`` labelings use
    ``-q..-1`` for the negative labels and either ``0..p-1`` or ``1..p`` for
    the non-negative ones, so zero may or may not be in use.
    """

    values: tuple[int, ...]
    target: str = VERTICES
    kind: str = NAT

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        problems = labeling_violations(self)
        if problems:
            raise DomainError("; ".join(problems))

    @classmethod
    def from_sequence(cls, seq: Sequence[int], target: str = VERTICES,
                      kind: str = NAT, low: int = 1) -> "Labeling":
        """Objects listed in increasing label order, labels from ``low``."""
        values = [0] * len(seq)
        for i, obj in enumerate(seq):
            values[obj] = low + i
        if kind == INT and low > 0 and seq:
            raise DomainError("integer labeling must start at or below 1")
        return cls(tuple(values), target, kind)

    @classmethod
    def from_split(cls, negative: Sequence[int], nonnegative: Sequence[int],
                   target: str = VERTICES, zero_used: bool = True) -> "Labeling":
        """Integer labeling: ``negative`` gets ``-q..-1`` in the given order,
        ``nonnegative`` continues from 0 (or from 1 when ``zero_used`` is off)."""
        m = len(negative) + len(nonnegative)
        values = [0] * m
        for i, obj in enumerate(negative):
            values[obj] = i - len(negative)
        start = 0 if zero_used else 1
        for i, obj in enumerate(nonnegative):
            values[obj] = start + i
        return cls(tuple(values), target, INT)

    @classmethod
    def identity(cls, m: int, target: str = VERTICES) -> "Labeling":
        return cls(tuple(range(1, m + 1)), target, NAT)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, obj: int) -> int:
        return self.values[obj]

    @cached_property
    def sequence(self) -> tuple[int, ...]:
        """Objects in increasing label order."""
        return tuple(sorted(range(len(self.values)), key=self.values.__getitem__))

    def less(self, x: int, y: int) -> bool:
        return self.values[x] < self.values[y]

    def negatives(self) -> list[int]:
        return [o for o in self.sequence if self.values[o] < 0]

    def nonnegatives(self) -> list[int]:
        return [o for o in self.sequence if self.values[o] >= 0]

    def to_ordering(self) -> "Ordering":
        return Ordering.from_sequence(self.sequence)


def labeling_violations(lab: Labeling) -> list[str]:
    problems = []
    if lab.target not in (VERTICES, EDGES):
        problems.append(f"unknown target {lab.target!r}")
    if lab.kind not in (NAT, INT):
        problems.append(f"unknown kind {lab.kind!r}")
    vals = lab.values
    m = len(vals)
    if len(set(vals)) != m:
        problems.append("labels are not distinct")
        return problems
    if lab.kind == NAT:
        if set(vals) != set(range(1, m + 1)):
            problems.append(f"nat labels must be exactly 1..{m}")
    elif lab.kind == INT:
        neg = sorted(x for x in vals if x < 0)
        nonneg = sorted(x for x in vals if x >= 0)
        if neg != list(range(-len(neg), 0)):
            problems.append("negative labels must be -q..-1")
        if nonneg and nonneg != list(range(0, len(nonneg))) \
                and nonneg != list(range(1, len(nonneg) + 1)):
            problems.append("non-negative labels must be 0..p-1 or 1..p")
    return problems


@dataclass(frozen=True)
class Ordering:
    """A total order on ``0..m-1`` given by ranks ``1..m``."""

    rank: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rank", tuple(int(r) for r in self.rank))
        if sorted(self.rank) != list(range(1, len(self.rank) + 1)):
            raise DomainError("ordering ranks must be a permutation of 1..m")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "Ordering":
        rank = [0] * len(seq)
        for i, obj in enumerate(seq):
            rank[obj] = i + 1
        return cls(tuple(rank))

    @classmethod
    def identity(cls, m: int) -> "Ordering":
        return cls(tuple(range(1, m + 1)))

    def __len__(self) -> int:
        return len(self.rank)

    @cached_property
    def sequence(self) -> tuple[int, ...]:
        return tuple(sorted(range(len(self.rank)), key=self.rank.__getitem__))

    def less(self, x: int, y: int) -> bool:
        return self.rank[x] < self.rank[y]

    def key(self, x: int) -> int:
        return self.rank[x]

    def min_of(self, objs: Iterable[int]) -> int:
        return min(objs, key=self.rank.__getitem__)

    def max_of(self, objs: Iterable[int]) -> int:
        return max(objs, key=self.rank.__getitem__)

    def reversed(self) -> "Ordering":
        m = len(self.rank)
        return Ordering(tuple(m + 1 - r for r in self.rank))

    def to_labeling(self, target: str = VERTICES) -> Labeling:
        return Labeling(self.rank, target, NAT)


def restrict_labeling(lab: Labeling, subset: Iterable[int]) -> tuple[Labeling, list[int]]:
    """Restrict ``lab`` to ``subset`` and recompress it.

    Returns the new labeling over ``0..len(subset)-1`` together with the map
    new id -> old id (subset in increasing id order).  Relative order is kept.
    Integer labelings keep the sign of every label: negatives are packed into
    ``-q..-1``, a surviving 0 stays 0 and positives are packed upward from
    the next free slot.
    """
    keep = sorted(set(subset))
    if any(not (0 <= o < len(lab)) for o in keep):
        raise DomainError("subset is not contained in the labeled domain")
    pos = {o: i for i, o in enumerate(keep)}
    ordered = sorted(keep, key=lab.values.__getitem__)
    if lab.kind == NAT:
        return Labeling.from_sequence([pos[o] for o in ordered], lab.target), keep
    neg = [pos[o] for o in ordered if lab[o] < 0]
    nonneg = [pos[o] for o in ordered if lab[o] >= 0]
    zero_used = any(lab[o] == 0 for o in keep)
    if not nonneg:
        zero_used = True
    return Labeling.from_split(neg, nonneg, lab.target, zero_used=zero_used), keep


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering ``0..n-1``; block indices are 1-based."""

    blocks: tuple[frozenset[int], ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        problems = partition_violations(self.blocks, self.n)
        if problems:
            raise DomainError("; ".join(problems))

    @classmethod
    def from_assignment(cls, assign: Sequence[int]) -> "Partition":
        """``assign[v]`` is the 1-based block of ``v``; empty blocks are kept."""
        k = max(assign, default=0)
        blocks: list[set[int]] = [set() for _ in range(k)]
        for v, b in enumerate(assign):
            blocks[b - 1].add(v)
        return cls(tuple(frozenset(b) for b in blocks), len(assign))

    def __len__(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        h = [0] * self.n
        for i, b in enumerate(self.blocks, start=1):
            for v in b:
                h[v] = i
        return tuple(h)


def partition_violations(blocks: Sequence[Iterable[int]], n: int) -> list[str]:
    problems = []
    seen: dict[int, int] = {}
    for i, b in enumerate(blocks, start=1):
        for v in b:
            if not (0 <= v < n):
                problems.append(f"block {i}: vertex {v} out of range")
            elif v in seen:
                problems.append(f"vertex {v} in blocks {seen[v]} and {i}")
            else:
                seen[v] = i
    missing = [v for v in range(n) if v not in seen]
    if missing:
        problems.append(f"vertices {missing} not covered")
    return problems


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


class WitnessKind(str, enum.Enum):
    VERTEX_PATH = "VertexPath"
    EDGE_PATH = "EdgePath"
    LOOSE_PATH = "LoosePath"
    SKIP_INCREASING_PATH = "SkipIncreasingPath"
    TWO_SIDED_PATH = "TwoSidedPath"
    BRANCHING_TREE = "BranchingTree"


@dataclass(frozen=True)
class IncreasingWitness:
    """A found increasing structure.

    ``vertices`` is the vertex sequence (pivots for skip-increasing paths,
    every tree vertex for branching trees), ``edges`` the edge or arc ids in
    path order (level order for trees) and ``levels`` the tree level ``t(v)``
    aligned with ``vertices``.
    """

    kind: WitnessKind
    vertices: tuple[int, ...] = ()
    edges: tuple[int, ...] = ()
    levels: tuple[int, ...] | None = None
    directed: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def length(self) -> int:
        """Edges for edge-based kinds and trees, vertices otherwise."""
        if self.kind in (WitnessKind.VERTEX_PATH, WitnessKind.TWO_SIDED_PATH):
            return len(self.vertices)
        return len(self.edges)

    @property
    def depth(self) -> int:
        return max(self.levels) if self.levels else 0


def _edge_vertices(host, e: int) -> frozenset[int]:
    if isinstance(host, Digraph):
        return frozenset(host.arcs[e])
    return host.edge_sets[e]


def _adjacent(host, u: int, v: int) -> bool:
    if isinstance(host, Digraph):
        return (u, v) in host.arc_index
    return v in host.adjacency[u]


def _loose_path_problems(host, edges: Sequence[int]) -> list[str]:
    problems = []
    sets = [_edge_vertices(host, e) for e in edges]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            shared = len(sets[i] & sets[j])
            if j == i + 1 and shared != 1:
                problems.append(f"consecutive edges {edges[i]},{edges[j]} share {shared} vertices")
            elif j > i + 1 and shared:
                problems.append(f"non-consecutive edges {edges[i]},{edges[j]} intersect")
    if isinstance(host, Digraph):
        for a, b in zip(edges, edges[1:]):
            if host.arcs[a][1] != host.arcs[b][0]:
                problems.append(f"arcs {a},{b} are not head-to-tail")
    return problems


def check_witness(w: IncreasingWitness, host, lab: Labeling) -> list[str]:
    """Re-validate a witness against its host structure and labeling."""
    problems: list[str] = []
    kind = WitnessKind(w.kind)
    directed = isinstance(host, Digraph)
    if kind in (WitnessKind.VERTEX_PATH, WitnessKind.TWO_SIDED_PATH):
        vs = w.vertices
        if not vs:
            return ["empty path"]
        if len(set(vs)) != len(vs):
            problems.append("repeated vertex")
        for a, b in zip(vs, vs[1:]):
            if not _adjacent(host, a, b):
                problems.append(f"{a},{b} not adjacent")
            if not lab[a] < lab[b]:
                problems.append(f"labels not increasing at {a},{b}")
        if kind == WitnessKind.TWO_SIDED_PATH:
            if not any(lab[v] < 0 for v in vs) or not any(lab[v] >= 0 for v in vs):
                problems.append("path does not cross from negative to non-negative labels")
        return problems
    if kind == WitnessKind.EDGE_PATH:
        es = w.edges
        if not es:
            return ["empty path"]
        problems += _loose_path_problems(host, es)
        for a, b in zip(es, es[1:]):
            if not lab[a] < lab[b]:
                problems.append(f"edge labels not increasing at {a},{b}")
        if w.vertices:
            vs = w.vertices
            if directed:
                expect = [host.arcs[es[0]][0]] + [host.arcs[e][1] for e in es]
                if list(vs) != expect:
                    problems.append("vertex sequence does not follow the arcs")
            elif host.k == 2:
                for i, e in enumerate(es):
                    if frozenset(vs[i:i + 2]) != host.edge_sets[e]:
                        problems.append(f"edge {e} does not join {vs[i:i + 2]}")
        return problems
    if kind == WitnessKind.LOOSE_PATH:
        k, vs, es = host.k, w.vertices, w.edges
        if len(vs) != (k - 1) * len(es) + 1:
            problems.append("vertex count does not match (k-1)t+1")
            return problems
        if len(set(vs)) != len(vs):
            problems.append("repeated vertex")
        for i, e in enumerate(es):
            window = frozenset(vs[(k - 1) * i:(k - 1) * i + k])
            if window != host.edge_sets[e]:
                problems.append(f"edge {e} is not window {i}")
        for a, b in zip(vs, vs[1:]):
            if not lab[a] < lab[b]:
                problems.append(f"labels not increasing at {a},{b}")
        return problems
    if kind == WitnessKind.SKIP_INCREASING_PATH:
        es, piv = w.edges, w.vertices
        problems += _loose_path_problems(host, es)
        if len(piv) != len(es) + 1:
            problems.append("need one more pivot than edges")
            return problems
        for i, e in enumerate(es):
            if piv[i] == piv[i + 1] or not {piv[i], piv[i + 1]} <= host.edge_sets[e]:
                problems.append(f"pivots {piv[i]},{piv[i + 1]} not both in edge {e}")
        for a, b in zip(piv, piv[1:]):
            if not lab[a] < lab[b]:
                problems.append(f"pivot labels not increasing at {a},{b}")
        return problems
    if kind == WitnessKind.BRANCHING_TREE:
        return _tree_problems(w, host, lab)
    return [f"unknown witness kind {kind}"]


def tree_edge_levels(host: Hypergraph, w: IncreasingWitness) -> list[int]:
    """t(e) for each tree edge: the largest level of its vertices."""
    level = dict(zip(w.vertices, w.levels or ()))
    return [max(level.get(v, -1) for v in host.edge_sets[e]) for e in w.edges]


def _tree_problems(w: IncreasingWitness, host: Hypergraph, lab: Labeling) -> list[str]:
    problems: list[str] = []
    k = host.k
    if w.levels is None or len(w.levels) != len(w.vertices):
        return ["levels missing"]
    if len(set(w.vertices)) != len(w.vertices):
        return ["repeated vertex"]
    level = dict(zip(w.vertices, w.levels))
    depth = max(w.levels, default=0)
    roots = [v for v, t in level.items() if t == 0]
    if len(roots) != 1:
        return [f"expected one root, found {len(roots)}"]
    covered: set[int] = set()
    tree_deg: dict[int, int] = defaultdict(int)
    for e in w.edges:
        vs = host.edge_sets[e]
        if not vs <= level.keys():
            problems.append(f"edge {e} uses vertices outside the tree")
            continue
        ts = sorted(level[v] for v in vs)
        t = ts[-1]
        if ts[0] != t - 1 or ts[1] != t or ts.count(t) != k - 1:
            problems.append(f"edge {e} is not one parent plus {k - 1} children")
        for v in vs:
            tree_deg[v] += 1
            if level[v] == t:
                if v in covered:
                    problems.append(f"vertex {v} introduced twice")
                covered.add(v)
    if set(level) - covered != {roots[0]}:
        problems.append("some vertex is not introduced by an edge")
    for v, t in level.items():
        want = 1 if t in (0, depth) else 2
        if tree_deg[v] != want:
            problems.append(f"vertex {v} at level {t} has tree degree {tree_deg[v]}, expected {want}")
    if lab.target == VERTICES:
        for t in range(depth):
            hi = max(lab[v] for v, s in level.items() if s == t)
            lo = min(lab[v] for v, s in level.items() if s == t + 1)
            if not hi < lo:
                problems.append(f"vertex labels at level {t} not below level {t + 1}")
    else:
        by_level: dict[int, list[int]] = defaultdict(list)
        for e, t in zip(w.edges, tree_edge_levels(host, w)):
            by_level[t].append(lab[e])
        for t in range(1, depth):
            if by_level[t] and by_level[t + 1] and not max(by_level[t]) < min(by_level[t + 1]):
                problems.append(f"edge labels at level {t} not below level {t + 1}")
    return problems
