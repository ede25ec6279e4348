import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from incpath import oracles
from incpath.core import DomainError, Digraph, Labeling, graph
from incpath.families import base_vertices, complete_hypergraph, extended_clique, half_graph
from incpath.peeling import (chi_star_upper_bound_search, core_number, d_core,
                             directed_paired_core_check, in_core, l_core, maximal_peel, out_core,
                             paired_core_check, paired_core_condition, two_distance_graph)

import brute
from conftest import digraphs, graph_with_vertex_labeling, graphs


def cycle(n):
    return graph(n, [(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)])


def complete(n, offset=0):
    return [(offset + a, offset + b) for a, b in combinations(range(n), 2)]


def random_order_core(g, d, rng):
    """Delete a random deficient vertex until none is left."""
    alive = set(range(g.n))
    while True:
        bad = [v for v in alive if len(g.adjacency[v] & alive) < d]
        if not bad:
            return alive
        alive.discard(rng.choice(bad))


class TestDCore:
    def test_cycle(self):
        assert d_core(cycle(5), 2).core == frozenset(range(5))

    def test_tree(self):
        tree = graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
        assert not d_core(tree, 2).core

    def test_k4_minus_edge(self):
        g = graph(4, [e for e in complete(4) if e != (0, 1)])
        assert not d_core(g, 3).core
        assert not brute.core_brute(brute.nx_graph(g), 3)

    @given(graphs(max_n=10), st.integers(0, 4))
    def test_matches_subset_union(self, g, d):
        core = d_core(g, d).core
        assert core == frozenset(brute.core_brute(brute.nx_graph(g), d))

    @given(graphs(max_n=10), st.integers(1, 4), st.randoms())
    def test_peel_order_independent(self, g, d, rnd):
        assert set(d_core(g, d).core) == random_order_core(g, d, rnd)

    @given(graphs(max_n=10), st.integers(1, 4))
    def test_fixpoint_maximal(self, g, d):
        res = d_core(g, d)
        # replaying the elimination order: each vertex was short when removed
        alive = set(range(g.n))
        for e in res.elimination:
            assert len(g.adjacency[e.vertex] & alive) < d
            alive.discard(e.vertex)
        assert alive == set(res.core)
        for v in set(range(g.n)) - res.core:
            grown = set(res.core) | {v}
            assert any(len(g.adjacency[u] & grown) < d for u in grown)

    def test_core_number(self):
        g = graph(5, complete(4) + [(3, 4)])
        assert core_number(g) == [3, 3, 3, 3, 1]

    def test_deterministic_ties(self):
        g = graph(3, [(0, 1)])
        assert [e.vertex for e in d_core(g, 1).elimination] == [2]
        assert [e.vertex for e in d_core(g, 2).elimination] == [0, 1, 2]


class TestLCore:
    def test_extended_clique(self):
        h = extended_clique(3, 4)
        assert l_core(h, 2, 3).core == frozenset(base_vertices(h))
        assert not l_core(h, 3, 2).core

    def test_complete(self):
        assert l_core(complete_hypergraph(3, 4), 2, 1).core == frozenset(range(4))

    def test_brute_force(self):
        h = extended_clique(3, 4)
        for ell, d in [(2, 3), (3, 2), (2, 1), (3, 1)]:
            union = set()
            for r in range(1, h.n + 1):
                for sub in combinations(range(h.n), r):
                    s = set(sub)
                    if all(sum(1 for e in h.incidence[v] if len(h.edge_sets[e] & s) >= ell) >= d
                           for v in s):
                        union |= s
            assert l_core(h, ell, d).core == frozenset(union)

    @pytest.mark.parametrize("seed", range(10))
    def test_monotone(self, seed):
        rng = random.Random(seed)
        n = rng.randint(5, 9)
        edges = rng.sample(list(combinations(range(n), 3)), rng.randint(3, 12))
        from incpath.core import Hypergraph
        h = Hypergraph(3, n, tuple(edges))
        for ell in (2, 3):
            for d in (1, 2, 3):
                assert l_core(h, ell, d).core >= l_core(h, ell, d + 1).core
                if ell < 3:
                    assert l_core(h, ell, d).core >= l_core(h, ell + 1, d).core


class TestDirectedCores:
    def test_cycle(self):
        d = Digraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
        assert out_core(d, 1).core == in_core(d, 1).core == frozenset(range(4))

    def test_transitive_tournament(self):
        d = Digraph(4, tuple((u, v) for u in range(4) for v in range(u + 1, 4)))
        assert not out_core(d, 2).core
        assert not oracles.max_out_core_brute(d, 2, range(4))

    def test_zero(self):
        d = Digraph(3, ((0, 1),))
        assert out_core(d, 0).core == frozenset(range(3))

    @given(digraphs(max_n=8), st.integers(0, 3))
    def test_brute(self, d, thr):
        assert out_core(d, thr).core == oracles.max_out_core_brute(d, thr, range(d.n))
        assert in_core(d, thr).core == oracles.max_out_core_brute(d.reversed(), thr, range(d.n))


class TestPaired:
    def test_two_k4_with_bridge(self):
        g = graph(8, complete(4) + complete(4, 4) + [(3, 4)])
        res = paired_core_check(g, range(4), range(4, 8), 3)
        assert res.found and res.crossing == (3, 4)
        assert oracles.paired_brute(g, set(range(4)), set(range(4, 8)), 3)

    def test_two_k4_without_bridge(self):
        g = graph(8, complete(4) + complete(4, 4))
        assert not paired_core_check(g, range(4), range(4, 8), 3).found

    def test_d_zero(self):
        g = graph(4, [(0, 1), (2, 3)])
        assert not paired_core_check(g, [0, 1], [2, 3], 0).found
        assert paired_core_check(g, [0, 2], [1, 3], 0).found

    def test_not_partition(self):
        with pytest.raises(DomainError):
            paired_core_check(graph(3, [(0, 1)]), [0, 1], [1, 2], 1)

    @given(graphs(max_n=9), st.integers(0, 2), st.randoms())
    def test_brute(self, g, d, rnd):
        v1 = {v for v in range(g.n) if rnd.random() < 0.5}
        v2 = set(range(g.n)) - v1
        assert paired_core_check(g, v1, v2, d).found == oracles.paired_brute(g, v1, v2, d)

    def test_directed_cycles(self):
        arcs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        d = Digraph(6, tuple(arcs + [(3, 0)]))
        assert directed_paired_core_check(d, [0, 1, 2], [3, 4, 5], 1).found
        assert oracles.directed_paired_brute(d, {0, 1, 2}, {3, 4, 5}, 1)
        d = Digraph(6, tuple(arcs + [(0, 3)]))
        assert not directed_paired_core_check(d, [0, 1, 2], [3, 4, 5], 1).found
        assert not oracles.directed_paired_brute(d, {0, 1, 2}, {3, 4, 5}, 1)

    def test_directed_d_zero(self):
        d = Digraph(2, ((1, 0),))
        assert directed_paired_core_check(d, [0], [1], 0).found

    @given(digraphs(max_n=8), st.integers(0, 2), st.randoms())
    def test_directed_brute(self, d, thr, rnd):
        v1 = {v for v in range(d.n) if rnd.random() < 0.5}
        v2 = set(range(d.n)) - v1
        assert directed_paired_core_check(d, v1, v2, thr).found == \
            oracles.directed_paired_brute(d, v1, v2, thr)

    def test_condition_with_side_minimum(self):
        g = graph(8, complete(4) + complete(4, 4) + [(3, 4)])
        assert paired_core_condition(g, 3, 4) is not None
        assert paired_core_condition(graph(4, complete(4)), 1, 2) is None


class TestMaximalPeel:
    def test_increasing_path(self):
        g = graph(3, [(0, 1), (1, 2)])
        res = maximal_peel(g, Labeling((1, 2, 3)))
        assert res.rounds == [{2}, {1}, {0}] and res.k == 3

    def test_peak(self):
        g = graph(3, [(0, 1), (1, 2)])
        res = maximal_peel(g, Labeling((1, 3, 2)))
        assert res.rounds == [{1}, {0, 2}] and res.k == 2

    def test_edgeless(self):
        assert maximal_peel(graph(4, []), Labeling((2, 1, 4, 3))).k == 1

    @given(graph_with_vertex_labeling(max_n=8))
    def test_rounds_equal_longest_path(self, gl):
        g, lab = gl
        assert maximal_peel(g, lab).k == brute.longest_increasing_vertex_path(brute.nx_graph(g), lab)


class TestChiStar:
    def test_c5(self):
        p = chi_star_upper_bound_search(cycle(5), 3)
        assert p is not None and len(p) <= 3
        assert all(not (cycle(5).adjacency[v] & b) for b in p.blocks for v in b)
        assert chi_star_upper_bound_search(cycle(5), 2) is None

    def test_half_graph(self):
        g = half_graph(4)
        p = chi_star_upper_bound_search(g, 2)
        sides = {frozenset(v for v in range(g.n) if g.names[v][0] == c) for c in "if"}
        assert set(p.blocks) == sides

    def test_heuristic_route(self):
        p = chi_star_upper_bound_search(cycle(15), 2, exact_limit=5)
        assert p is None or len(p) <= 2
        p = chi_star_upper_bound_search(cycle(16), 2, exact_limit=5)
        assert p is not None and len(p) == 2

    @given(graphs(max_n=7))
    def test_exact_matches_chromatic(self, g):
        chi = brute.chromatic(brute.nx_graph(g))
        assert chi_star_upper_bound_search(g, chi) is not None
        if chi > 1:
            assert chi_star_upper_bound_search(g, chi - 1) is None

    def test_back_degree_cap(self):
        star = graph(4, [(0, 1), (0, 2), (0, 3)])
        capped = chi_star_upper_bound_search(star, 2, back_degree_cap=1)
        assert capped is not None
        for v in range(star.n):
            earlier = {u for u in star.adjacency[v] if capped.block_of[u] < capped.block_of[v]}
            assert len(earlier) <= 1
        # centre must come first, so it sits alone below the leaves
        assert capped.block_of[0] < min(capped.block_of[v] for v in (1, 2, 3))


class TestTwoDistance:
    def test_k4(self):
        assert two_distance_graph(graph(4, complete(4)), 2).m == 6

    def test_c5(self):
        g = two_distance_graph(cycle(5), 1)
        assert {frozenset(e) for e in g.edges} == {frozenset({i, (i + 2) % 5}) for i in range(5)}

    def test_large_threshold(self):
        assert two_distance_graph(graph(4, complete(4)), 3).m == 0
