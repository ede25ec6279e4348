"""Generators for the named graph and hypergraph families.

Every generator creates vertices in a fixed order that only depends on the
defining indices, so the expansion at a smaller truncation is a prefix (and
an induced substructure, by vertex name) of the expansion at a larger one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import Hypergraph, ParameterError


def half_graph(n: int) -> Hypergraph:
    """Half-graph ``G[I, F]``: ``i_x ~ f_y`` iff ``x <= y``.

    Vertex ``i_x`` has id ``2(x-1)`` and ``f_y`` has id ``2(y-1)+1``; only
    the order inside each side carries meaning.
    """
    if n < 1:
        raise ParameterError("half_graph needs n >= 1")
    names = []
    for x in range(1, n + 1):
        names += [f"i{x}", f"f{x}"]
    edges = [(2 * (x - 1), 2 * (y - 1) + 1)
             for y in range(1, n + 1) for x in range(1, y + 1)]
    return Hypergraph(2, 2 * n, tuple(edges), tuple(names))


def half_graph_sides(n: int) -> tuple[list[int], list[int]]:
    """Ids of the I side and F side of ``half_graph(n)``."""
    return [2 * x for x in range(n)], [2 * x + 1 for x in range(n)]


def dyadic_class(m: int) -> int:
    """The ``i`` with ``m = 2**(i-1) * (2j-1)``."""
    if m < 1:
        raise ParameterError("dyadic_class needs m >= 1")
    return (m & -m).bit_length()


def dyadic_position(m: int) -> int:
    """The ``j`` with ``m = 2**(i-1) * (2j-1)``: position of ``m`` in its class."""
    odd = m >> (dyadic_class(m) - 1)
    return (odd + 1) // 2


def dyadic_index_set(i: int, n: int) -> set[int]:
    """``{m <= n : m = 2**(i-1) (2j-1), j >= 1}``."""
    if i < 1 or n < 1:
        raise ParameterError("dyadic_index_set needs i >= 1 and n >= 1")
    step = 1 << (i - 1)
    return set(range(step, n + 1, 2 * step))


def dyadic_edge_rule(side_a: str, a: int, side_b: str, b: int) -> bool:
    """Closed-form adjacency test for the FIN graph ``H``.

    ``(side, m)`` with side ``"L"`` or ``"R"``.  An edge joins L to R and is
    present iff the vertex in the higher class (the infinite-degree side of
    its half-graph copy) sits at a position no later than the other one.
    """
    if side_a == side_b:
        return False
    ca, cb = dyadic_class(a), dyadic_class(b)
    if ca == cb:
        return False
    if ca > cb:
        return dyadic_position(a) <= dyadic_position(b)
    return dyadic_position(b) <= dyadic_position(a)


def dyadic_bipartite_h(n: int, *, split: bool = False):
    """The bipartite FIN graph ``H = H1 ∪ H2`` truncated to ``L, R = 1..n``.

    ``H1`` joins ``R_j`` (infinite side) to ``L_i`` (finite side) for
    ``j > i``; ``H2`` swaps the roles.  Vertex ``mL`` has id ``2(m-1)``,
    ``mR`` has id ``2(m-1)+1``.  With ``split`` the pair of edge sets
    ``(E(H1), E(H2))`` is returned as well.
    """
    if n < 2:
        raise ParameterError("dyadic_bipartite_h needs n >= 2")
    names = []
    for m in range(1, n + 1):
        names += [f"{m}L", f"{m}R"]
    lid = lambda m: 2 * (m - 1)  # noqa: E731
    rid = lambda m: 2 * (m - 1) + 1  # noqa: E731
    classes: dict[int, list[int]] = {}
    for m in range(1, n + 1):
        classes.setdefault(dyadic_class(m), []).append(m)
    h1, h2 = [], []
    for i, low in classes.items():
        for j, high in classes.items():
            if j <= i:
                continue
            # copy of G[I, F] with I = class j (high), F = class i (low),
            # positions taken inside each class
            for y_pos, f in enumerate(low, start=1):
                for x_pos, inf in enumerate(high, start=1):
                    if x_pos <= y_pos:
                        h1.append((rid(inf), lid(f)))
                        h2.append((lid(inf), rid(f)))
    edges = sorted(set(h1) | set(h2), key=lambda e: (max(e), min(e)))
    h = Hypergraph(2, 2 * n, tuple(edges), tuple(names))
    if split:
        return h, set(map(frozenset, h1)), set(map(frozenset, h2))
    return h


def dyadic_sides(n: int) -> tuple[list[int], list[int]]:
    """Ids of the L side and R side of ``dyadic_bipartite_h(n)``."""
    return [2 * m for m in range(n)], [2 * m + 1 for m in range(n)]


def cl_separation_example(k: int, ell: int, n: int) -> Hypergraph:
    """Complete ``(ell-1)``-uniform hypergraph on ``n`` base vertices with each
    edge padded by ``k-ell+1`` private pendant vertices."""
    if ell < 2:
        raise ParameterError("cl_separation_example needs ell >= 2")
    if ell > k:
        raise ParameterError("cl_separation_example needs ell <= k")
    if n < ell - 1:
        raise ParameterError("cl_separation_example needs n >= ell - 1")
    r, pad = ell - 1, k - ell + 1
    names: list[str] = []
    edges: list[tuple[int, ...]] = []
    base: list[int] = []
    for j in range(1, n + 1):
        base.append(len(names))
        names.append(f"v{j}")
        # edges whose largest base index is j, colex order
        for rest in combinations(range(1, j), r - 1):
            idx = rest + (j,)
            pend = []
            for t in range(1, pad + 1):
                pend.append(len(names))
                names.append("u" + "_".join(map(str, idx)) + f"_{t}")
            edges.append(tuple(base[i - 1] for i in idx) + tuple(pend))
    return Hypergraph(k, len(names), tuple(edges), tuple(names))


def extended_clique(k: int, n: int) -> Hypergraph:
    """Complete graph on ``v1..vn`` with every edge padded by ``k-2`` pendants."""
    if k < 3 or n < 2:
        raise ParameterError("extended_clique needs k >= 3 and n >= 2")
    return cl_separation_example(k, 3, n)


def base_vertices(h: Hypergraph) -> list[int]:
    """Ids whose name marks them as base vertices (``v<j>``)."""
    return [v for v, name in enumerate(h.names) if str(name).startswith("v")]


def infinite_branching_tree_trunc(k: int, depth: int) -> Hypergraph:
    """Depth-``depth`` truncation of the rooted (k-1)-branching tree.

    Ids follow breadth-first order, so the identity labeling is
    level-monotone.  Use :func:`branching_tree_levels` for ``t(v)``.
    """
    if k < 2 or depth < 1:
        raise ParameterError("infinite_branching_tree_trunc needs k >= 2, depth >= 1")
    names = ["r"]
    edges: list[tuple[int, ...]] = []
    frontier = [0]
    for _ in range(depth):
        nxt = []
        for x in frontier:
            new = list(range(len(names), len(names) + k - 1))
            names += [f"{names[x]}.{c}" for c in range(1, k)]
            edges.append((x,) + tuple(new))
            nxt += new
        frontier = nxt
    return Hypergraph(k, len(names), tuple(edges), tuple(names))


def branching_tree_levels(k: int, depth: int) -> list[int]:
    """``t(v)`` for the vertices of ``infinite_branching_tree_trunc(k, depth)``."""
    levels = [0]
    width = 1
    for t in range(1, depth + 1):
        levels += [t] * (width * (k - 1))
        width *= k - 1
    return levels


def branching_tree_edge_count(k: int, depth: int) -> int:
    if k == 2:
        return depth
    return ((k - 1) ** depth - 1) // (k - 2)


def tk_tree(height: int, branching: int) -> Hypergraph:
    """Finite shadow of ``T_k``: every non-leaf has ``branching`` children,
    all leaves sit at depth ``height``.  Names are child-index paths."""
    if height < 1 or branching < 1:
        raise ParameterError("tk_tree needs height >= 1 and branching >= 1")
    names = ["t"]
    edges = []
    frontier = [0]
    for _ in range(height):
        nxt = []
        for x in frontier:
            for c in range(1, branching + 1):
                names.append(f"{names[x]}.{c}")
                edges.append((x, len(names) - 1))
                nxt.append(len(names) - 1)
        frontier = nxt
    return Hypergraph(2, len(names), tuple(edges), tuple(names))


def complete_hypergraph(k: int, n: int) -> Hypergraph:
    """All ``C(n, k)`` k-subsets of ``1..n`` (not simple for ``3 <= k < n``)."""
    if not 2 <= k <= n:
        raise ParameterError("complete_hypergraph needs 2 <= k <= n")
    # colex order keeps truncations as prefixes
    edges = sorted(combinations(range(n), k), key=lambda e: e[::-1])
    return Hypergraph(k, n, tuple(edges), tuple(str(i) for i in range(1, n + 1)))


# ---------------------------------------------------------------------------
# Named family specs
# ---------------------------------------------------------------------------

FAMILIES = {
    "HalfGraph": (half_graph, ("n",)),
    "DyadicBipartiteH": (dyadic_bipartite_h, ("n",)),
    "ExtendedClique": (extended_clique, ("k", "n")),
    "CLSeparation": (cl_separation_example, ("k", "l", "n")),
    "InfiniteBranchingTree": (infinite_branching_tree_trunc, ("k", "depth")),
    "TkTree": (tk_tree, ("height", "branching")),
    "CompleteHypergraph": (complete_hypergraph, ("k", "n")),
}

# the parameter that plays the role of the truncation size
TRUNCATION_PARAM = {
    "HalfGraph": "n",
    "DyadicBipartiteH": "n",
    "ExtendedClique": "n",
    "CLSeparation": "n",
    "InfiniteBranchingTree": "depth",
    "TkTree": "branching",
    "CompleteHypergraph": "n",
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its parameters; :meth:`expand` builds it."""

    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ParameterError(f"unknown family {self.name!r}; known: {sorted(FAMILIES)}")
        missing = [p for p in FAMILIES[self.name][1] if p not in self.params]
        if missing:
            raise ParameterError(f"family {self.name} needs parameters {missing}")

    def expand(self) -> Hypergraph:
        fn, order = FAMILIES[self.name]
        return fn(*(int(self.params[p]) for p in order))

    def truncated(self, size: int) -> "FamilySpec":
        params = dict(self.params)
        params[TRUNCATION_PARAM[self.name]] = size
        return FamilySpec(self.name, params)


def is_induced_by_names(small: Hypergraph, big: Hypergraph) -> bool:
    """``small`` equals the sub-hypergraph of ``big`` induced on its names."""
    index = {name: v for v, name in enumerate(big.names)}
    if any(name not in index for name in small.names):
        return False
    keep = {index[name] for name in small.names}
    named = lambda h, e: frozenset(h.names[v] for v in e)  # noqa: E731
    want = {named(big, e) for e in big.edges if set(e) <= keep}
    have = {named(small, e) for e in small.edges}
    return want == have


__all__ = [
    "half_graph", "half_graph_sides", "dyadic_class", "dyadic_position", "dyadic_index_set",
    "dyadic_edge_rule", "dyadic_bipartite_h", "dyadic_sides", "cl_separation_example",
    "extended_clique", "base_vertices", "infinite_branching_tree_trunc", "branching_tree_levels",
    "branching_tree_edge_count", "tk_tree", "complete_hypergraph", "FamilySpec", "FAMILIES",
    "is_induced_by_names",
]
