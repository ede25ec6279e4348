"""Reference computations for the tests, written against networkx so they
share no code with the package."""

from itertools import permutations, product

import networkx as nx


def nx_graph(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def nx_digraph(dg):
    G = nx.DiGraph()
    G.add_nodes_from(range(dg.n))
    G.add_edges_from(dg.arcs)
    return G


def all_vertex_paths(G):
    yield from ([v] for v in G.nodes)
    for s in G.nodes:
        for t in G.nodes:
            if s != t:
                yield from nx.all_simple_paths(G, s, t)


def longest_increasing_vertex_path(G, lab):
    return max((len(p) for p in all_vertex_paths(G)
                if all(lab[a] < lab[b] for a, b in zip(p, p[1:]))), default=0)


def chromatic(G):
    n = G.number_of_nodes()
    for c in range(1, n + 1):
        for col in product(range(c), repeat=n):
            if all(col[u] != col[v] for u, v in G.edges):
                return c
    return 0


def dichromatic(D):
    n = D.number_of_nodes()
    for c in range(1, n + 1):
        for col in product(range(c), repeat=n):
            if all(nx.is_directed_acyclic_graph(D.subgraph([v for v in D if col[v] == i]))
                   for i in range(c)):
                return c
    return 0


def adversarial_vertex(G):
    """Minimum over all labelings of the longest increasing path."""
    n = G.number_of_nodes()
    return min(longest_increasing_vertex_path(G, dict(zip(range(n), perm)))
               for perm in permutations(range(n)))


def edge_paths_graph(g):
    """Every edge path of a graph as (edge ids) via simple vertex paths."""
    G = nx_graph(g)
    index = g.edge_index
    seen = set()
    for p in all_vertex_paths(G):
        if len(p) >= 2:
            ids = tuple(index[frozenset(e)] for e in zip(p, p[1:]))
            if ids not in seen:
                seen.add(ids)
                yield ids


def edge_paths_digraph(dg):
    D = nx_digraph(dg)
    index = dg.arc_index
    for p in all_vertex_paths(D):
        if len(p) >= 2:
            yield tuple(index[e] for e in zip(p, p[1:]))


def core_brute(G, d):
    best = set()
    nodes = list(G.nodes)
    for mask in range(1, 1 << len(nodes)):
        s = {nodes[i] for i in range(len(nodes)) if mask >> i & 1}
        if all(sum(1 for u in G[v] if u in s) >= d for v in s):
            best |= s
    return best
