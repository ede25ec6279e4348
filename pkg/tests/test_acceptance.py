"""Acceptance criteria 1 to 11.

Each criterion runs its registered experiment and then re-derives the
result along a second route: the instances are rebuilt from the trial
seeds (checked against the content hashes in the report) and re-verified
with networkx-based brute force that shares no code with the package.

Every criterion prints one ``criterion N PASS|FAIL`` line, both inline and
in the terminal summary.
"""

import math
import random
from itertools import combinations, product

import networkx as nx
import pytest

from incpath.core import Ordering, Partition, graph
from incpath.experiments import (case_two_instance, directed_case_two_instance, forward_instance,
                                 random_connected_graph, random_digraph, random_graph,
                                 random_labeling, random_linear_3graph, random_order,
                                 run_experiment)
from incpath.families import (base_vertices, complete_hypergraph, dyadic_bipartite_h, dyadic_sides,
                              extended_clique, half_graph)
from incpath.io import content_hash, dump_graph
from incpath.peeling import core_number, l_core, maximal_peel
from incpath.search import greedy_tree_extend, iter_branching_trees, two_sided_forward
from incpath.synth import (block_alternating, chi_star_labeling, merge_ordering,
                           reiterman_digraph_edge, smallest_last_coloring, type_split_hyperedge,
                           z_matching_edge, z_two_sided_vertex, z_two_sided_vertex_directed)

import brute


@pytest.fixture
def announce(request, capsys):
    def _announce(number, checks, detail=""):
        ok = all(checks.values())
        failed = [k for k, v in checks.items() if not v]
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}"
        if failed:
            line += f" failed={','.join(failed)}"
        if detail:
            line += f" ({detail})"
        request.config._acceptance_lines.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok
    return _announce


def trial_rng(index, seed=0):
    return random.Random(seed * 1_000_003 + index)


def hash_of(g):
    return content_hash(dump_graph(g))


def verdicts_pass(report, names=None):
    names = names or list(report.verdicts)
    return all(report.verdicts[n]["pass"] for n in names)


def dag_longest(g, lab):
    """Vertices on the longest increasing path via a networkx DAG."""
    D = nx.DiGraph()
    D.add_nodes_from(range(g.n))
    pairs = g.arcs if hasattr(g, "arcs") else g.edges
    for u, v in pairs:
        if lab[u] < lab[v]:
            D.add_edge(u, v)
        elif lab[v] < lab[u] and not hasattr(g, "arcs"):
            D.add_edge(v, u)
    return nx.dag_longest_path_length(D) + 1 if g.n else 0


def increasing(paths, lab):
    return [p for p in paths if all(lab[a] < lab[b] for a, b in zip(p, p[1:]))]


def loose_paths_3(h):
    """Every loose edge sequence of a 3-graph: consecutive edges meet in one
    vertex, all other pairs are disjoint."""
    sets = [frozenset(e) for e in h.edges]

    def grow(path):
        yield tuple(path)
        for f in range(len(sets)):
            if f in path or len(sets[path[-1]] & sets[f]) != 1:
                continue
            if any(sets[e] & sets[f] for e in path[:-1]):
                continue
            path.append(f)
            yield from grow(path)
            path.pop()

    for e in range(len(sets)):
        yield from grow([e])


def vertex_paths(G):
    return [tuple(p) for p in brute.all_vertex_paths(G)]


# ---------------------------------------------------------------------------


def test_criterion_1(announce):
    report = run_experiment("ghrv-oracle", {"max_n": 6})
    atlas = [G for G in nx.graph_atlas_g() if 0 < G.number_of_nodes() <= 6 and nx.is_connected(G)]
    chi_ok = len(atlas) == len(report.trials) == 143
    adv_ok = True
    for i, (G, rec) in enumerate(zip(atlas, report.trials)):
        g = graph(G.number_of_nodes(), sorted(tuple(sorted(e)) for e in G.edges))
        chi_ok &= rec["graph"] == hash_of(g) and brute.chromatic(G) == rec["chi"]
        if G.number_of_nodes() <= 5 or i % 16 == 0:
            adv_ok &= brute.adversarial_vertex(G) == rec["adversarial"]
    checks = {"experiment": verdicts_pass(report), "brute-chromatic": chi_ok,
              "brute-adversarial": adv_ok}
    assert announce(1, checks, f"{len(report.trials)} connected graphs"), checks


def test_criterion_2(announce):
    report = run_experiment("rm-shadow")
    half = [t for t in report.trials if t["part"] == "half-graph"]
    trees = [t for t in report.trials if t["part"] == "tree"]
    growth = len(half) == 40
    for rec in half:
        n = rec["n"]
        g = half_graph(n)
        lengths = [dag_longest(g, random_labeling(trial_rng(n * 10_000 + t), g.n)) for t in range(100)]
        growth &= min(lengths) == rec["min_length"] >= math.floor(math.log2(n))
    peel = True
    count = 0
    for order in range(1, 11):
        for T in ([nx.empty_graph(1)] if order == 1 else nx.nonisomorphic_trees(order)):
            g = graph(order, sorted(tuple(sorted(e)) for e in T.edges))
            lab = chi_star_labeling(g, Partition.from_assignment(smallest_last_coloring(g)))
            rounds = maximal_peel(g, lab).k
            peel &= not nx.k_core(brute.nx_graph(g), 2).nodes
            peel &= brute.longest_increasing_vertex_path(brute.nx_graph(g), lab) <= rounds
            count += 1
    peel &= count == len(trees)
    checks = {"experiment": verdicts_pass(report), "nx-growth": growth, "brute-tree-certificate": peel}
    assert announce(2, checks, f"half-graphs n<=40, {count} trees"), checks


def test_criterion_3(announce):
    report = run_experiment("block-alternating")
    ok = len(report.trials) == 200
    for i, rec in enumerate(report.trials):
        rng = trial_rng(i)
        g = random_connected_graph(rng, 12)
        seed_edge = rng.randrange(g.m)
        ok &= rec["graph"] == hash_of(g) and rec["seed_edge"] == seed_edge
        res = block_alternating(g, seed_edge)
        where = res.block_of()
        paths = increasing(brute.edge_paths_graph(g), res.labeling)
        for p in paths:
            blocks = [where[e] for e in p]
            ok &= all(a == b for a, b in zip(blocks, blocks[1:]) if a[1] % 2 == 0)
        longest = max(len(p) for p in paths)
        ok &= longest == rec["longest"] <= res.window_bound()
    checks = {"experiment": verdicts_pass(report), "nx-enumeration": ok}
    assert announce(3, checks, "200 connected graphs"), checks


def _typesplit_second_route(report):
    returns_ok = branch_ok = True
    literal_bad = []
    for i, rec in enumerate(report.trials):
        rng = trial_rng(i)
        h = random_linear_3graph(rng, 10)
        base = Ordering.from_sequence(random_order(rng, h.n))
        prec = Ordering.from_sequence(random_order(rng, h.n))
        assert rec["graph"] == hash_of(h)
        res = type_split_hyperedge(h, base, prec)
        two = set(res.type_two)
        ell = [min(e, key=base.key) for e in h.edges]
        second = [sorted(e, key=base.key)[1] for e in h.edges]
        literal = False
        for p in increasing(loose_paths_3(h), res.labeling):
            returns_ok &= not any(a in two and b not in two for a, b in zip(p, p[1:]))
            if not all(e in two for e in p):
                continue
            for a, b in zip(p, p[1:]):
                if prec.less(ell[a], ell[b]):
                    literal = True
                    (v,) = set(h.edges[a]) & set(h.edges[b])
                    branch_ok &= v not in (ell[a], second[a])
            for a, b, c in zip(p, p[1:], p[2:]):
                if ell[a] == ell[b] == ell[c]:
                    literal = True
                    branch_ok = False
        if literal:
            literal_bad.append(i)
    return returns_ok, branch_ok, literal_bad


def test_criterion_4(announce):
    report = run_experiment("typesplit-audit")
    returns_ok, branch_ok, literal_bad = _typesplit_second_route(report)
    literal = report.verdicts["literal-ell-descent"]
    agree = (not literal["pass"]) == bool(literal_bad) and \
        (literal["trials"] if not literal["pass"] else []) == literal_bad
    checks = {"no-return": report.verdicts["no-return-to-type-one"]["pass"] and returns_ok,
              "branch-descent": report.verdicts["branch-ell-descent"]["pass"] and branch_ok,
              "literal-descent": literal["pass"] and not literal_bad}
    announce(4, checks, f"literal descent violated in {len(literal_bad)}/100 trials, "
                             f"first {literal_bad[:5]}; the branch form and no-return hold")
    # the sub-checks that hold must hold on both routes, and both routes must
    # agree on exactly which trials break the literal form
    assert checks["no-return"] and checks["branch-descent"] and agree


@pytest.mark.xfail(strict=True, reason="the literal descent fails when the junction is the "
                                       "base-largest vertex of the lower edge")
def test_criterion_4_literal_descent():
    report = run_experiment("typesplit-audit")
    assert report.verdicts["literal-ell-descent"]["pass"]
    assert not _typesplit_second_route(report)[2]


def _tree_ok(h, lab, w, depth):
    """Independent validity check of a (k-1)-branching tree witness."""
    k = h.k
    level = dict(zip(w.vertices, w.levels))
    sets = [frozenset(h.edges[e]) for e in w.edges]
    if len(set(w.vertices)) != len(w.vertices) or sorted(level.values())[0] != 0:
        return False
    if list(level.values()).count(0) != 1 or max(level.values()) != depth:
        return False
    if len(sets) != sum((k - 1) ** t for t in range(depth)) or len(level) != 1 + len(sets) * (k - 1):
        return False
    if set().union(*sets) != set(level):
        return False
    for s in sets:
        ts = sorted(level[v] for v in s)
        if ts[1:] != [ts[0] + 1] * (k - 1):
            return False
    inc = nx.Graph()
    inc.add_edges_from((("e", i), v) for i, s in enumerate(sets) for v in s)
    if not nx.is_connected(inc):
        return False
    for v, t in level.items():
        deg = sum(1 for s in sets if v in s)
        if deg != (1 if t in (0, depth) else 2):
            return False
    for t in range(depth):
        lo = [lab[v] for v, x in level.items() if x == t]
        hi = [lab[v] for v, x in level.items() if x == t + 1]
        if max(lo) >= min(hi):
            return False
    return True


def test_criterion_5(announce):
    report = run_experiment("hyper-c2-greedy")
    want = {9: 1, 15: 2, 21: 3}
    depths = all(rec["depth"] == want[rec["n"]] and rec["greedy_levels"] == want[rec["n"]]
                 for rec in report.trials)
    counts = {n: sum(1 for r in report.trials if r["n"] == n) for n in want}
    trees = True
    for n, depth in want.items():
        h = complete_hypergraph(3, n)
        core = l_core(h, 3, 2).core
        for t in range(10):
            lab = random_labeling(trial_rng(n * 10_000 + t), h.n)
            w = greedy_tree_extend(h, lab, core, depth).witness
            trees &= w is not None and _tree_ok(h, lab, w, depth)
    checks = {"experiment": verdicts_pass(report), "depths": depths and counts == {9: 50, 15: 50, 21: 50},
              "independent-tree-check": trees}
    assert announce(5, checks, "depths 1, 2, 3 at n = 9, 15, 21"), checks


def _depth_two_trees(h, lab):
    S = h.edge_sets
    found = set()
    for e0 in range(h.m):
        for r in S[e0]:
            x, y = sorted(S[e0] - {r})
            if lab[r] >= min(lab[x], lab[y]):
                continue
            top = max(lab[x], lab[y])
            for ex, ey in product(range(h.m), repeat=2):
                if len({e0, ex, ey}) < 3 or S[ex] & S[ey]:
                    continue
                if S[ex] & S[e0] != {x} or S[ey] & S[e0] != {y}:
                    continue
                if all(lab[v] > top for v in (S[ex] | S[ey]) - S[e0]):
                    found.add((r, (x, y), frozenset({e0, ex, ey})))
    return found


def _extends(h, lab, tree):
    r, inner, edges = tree
    S = h.edge_sets
    used = set().union(*(S[e] for e in edges))
    leaves = sorted(used - {r} - set(inner))
    top = max(lab[v] for v in leaves)
    options = []
    for v in leaves:
        options.append([f for f in range(h.m) if S[f] & used == {v}
                        and all(lab[u] > top for u in S[f] - {v})])
    for pick in product(*options):
        fresh = [S[f] - {v} for f, v in zip(pick, leaves)]
        if all(not (a & b) for a, b in combinations(fresh, 2)):
            return True
    return False


def test_criterion_6(announce):
    report = run_experiment("counterexample")
    h = extended_clique(3, 4)
    base = set(base_vertices(h))
    nonempty_base = True
    for ell, d, expect in ((2, 3, base), (3, 2, set())):
        union = set()
        for r in range(1, h.n + 1):
            for sub in combinations(range(h.n), r):
                s = set(sub)
                if all(sum(1 for e in h.incidence[v] if len(h.edge_sets[e] & s) >= ell) >= d for v in s):
                    union |= s
        nonempty_base &= union == expect
    inner_ok = agree = no_deeper = True
    with_trees = 0
    labeling_trials = [t for t in report.trials if "seed" in t]
    for t, rec in enumerate(labeling_trials):
        lab = random_labeling(trial_rng(t), h.n)
        mine = _depth_two_trees(h, lab)
        theirs = {(w.vertices[w.levels.index(0)], frozenset(w.edges))
                  for w in iter_branching_trees(h, lab, 2)}
        agree &= {(r, e) for r, _, e in mine} == theirs and len(theirs) == rec["depth_two_trees"]
        inner_ok &= all(set(inner) <= base for _, inner, _ in mine)
        no_deeper &= not any(_extends(h, lab, tree) for tree in mine)
        with_trees += bool(mine)
    checks = {"experiment": verdicts_pass(report), "brute-cores": nonempty_base,
              "local-enumeration-agrees": agree and len(labeling_trials) == 500,
              "internal-in-base": inner_ok, "no-depth-three": no_deeper}
    assert announce(6, checks, f"{with_trees}/500 labelings admit a depth-2 tree"), checks


def test_criterion_7(announce):
    report = run_experiment("fin-family")
    structure = [t for t in report.trials if t["part"] == "structure"]
    ok = len(structure) == 63
    for rec in structure:
        n = rec["n"]
        g, e1, e2 = dyadic_bipartite_h(n, split=True)
        G = brute.nx_graph(g)
        left, _ = dyadic_sides(n)
        ok &= nx.bipartite.is_bipartite_node_set(G, set(left)) and not (e1 & e2)
        d0 = max(nx.core_number(G).values()) + 1
        ok &= d0 == rec["d0"] and not nx.k_core(G, d0).nodes
        ok &= d0 == 1 or bool(nx.k_core(G, d0 - 1).nodes)
        ok &= max(core_number(g)) + 1 == d0
    g = dyadic_bipartite_h(64)
    growth = [t for t in report.trials if t["part"] == "growth"]
    grow_ok = len(growth) == 100
    for t, rec in enumerate(growth):
        length = dag_longest(g, random_labeling(trial_rng(t), g.n))
        grow_ok &= length == rec["length"] >= 4
    checks = {"experiment": verdicts_pass(report), "nx-structure-and-cores": ok, "nx-growth": grow_ok}
    assert announce(7, checks, f"n = 2..64, min growth length {min(r['length'] for r in growth)}"), checks


def test_criterion_8(announce):
    report = run_experiment("z-matching")
    ok = len(report.trials) == 200
    for i, rec in enumerate(report.trials):
        rng = trial_rng(i)
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.randint(1, 12))
        ok &= rec["graph"] == hash_of(g)
        lab = z_matching_edge(g).labeling
        pos = {g.edges[e] for e in range(g.m) if lab[e] > 0}
        ok &= nx.is_matching(brute.nx_graph(g), pos)
        for p in increasing(brute.edge_paths_graph(g), lab):
            ok &= all(lab[e] <= 0 for e in p[:-1])
    checks = {"experiment": verdicts_pass(report), "nx-enumeration": ok}
    assert announce(8, checks, "200 random graphs"), checks


def _two_sided_exists(paths, lab, min_neg, min_pos):
    for p in increasing(paths, lab):
        neg = sum(1 for v in p if lab[v] < 0)
        if neg >= min_neg and len(p) - neg >= min_pos:
            return True
    return False


def _nx_cores(G, side, d):
    return set(nx.k_core(G.subgraph(side), d).nodes)


def _two_sided_witness_ok(G, lab, w):
    p = list(w.vertices)
    steps = all(G.has_edge(a, b) for a, b in zip(p, p[1:]))
    neg = sum(1 for v in p if lab[v] < 0)
    return steps and len(set(p)) == len(p) and all(lab[a] < lab[b] for a, b in zip(p, p[1:])) \
        and neg >= 3 and len(p) - neg >= 3


def test_criterion_9(announce):
    report = run_experiment("z-twosided")
    refuse = [t for t in report.trials if t["part"] == "refuse"]
    forward = [t for t in report.trials if t["part"] == "forward"]
    ref_ok = len(refuse) == 50
    brute_count = 0
    for i, rec in enumerate(refuse):
        g, v1, v2 = case_two_instance(trial_rng(i), 2)
        ref_ok &= rec["graph"] == hash_of(g)
        G = brute.nx_graph(g)
        w1, w2 = _nx_cores(G, v1, 2), _nx_cores(G, v2, 2)
        ref_ok &= not any((a in w1 and b in w2) or (a in w2 and b in w1) for a, b in g.edges)
        res = z_two_sided_vertex(g, v1, v2, 2)
        ref_ok &= set(res.w1) == w1 and set(res.w2) == w2
        if g.n <= 14:
            brute_count += 1
            ref_ok &= not _two_sided_exists(vertex_paths(G), res.labeling,
                                            res.bound_neg + 1, res.bound_pos + 1)
    fwd_ok = len(forward) == 50
    for i, rec in enumerate(forward):
        g, lab, _ = forward_instance(trial_rng(100_000 + i))
        fwd_ok &= rec["graph"] == hash_of(g)
        G = brute.nx_graph(g)
        v1 = {v for v in range(g.n) if lab[v] >= 0}
        w1, w2 = _nx_cores(G, v1, 2), _nx_cores(G, set(range(g.n)) - v1, 2)
        fwd_ok &= min(len(w1), len(w2)) >= 6
        fwd_ok &= any((a in w1 and b in w2) or (a in w2 and b in w1) for a, b in g.edges)
        w = two_sided_forward(g, lab, 2)
        fwd_ok &= w is not None and _two_sided_witness_ok(G, lab, w)
    checks = {"experiment": verdicts_pass(report), "nx-refuse-side": ref_ok, "nx-forward-side": fwd_ok}
    assert announce(9, checks, f"brute path enumeration on {brute_count} refuse instances"), checks


def test_criterion_10(announce):
    report = run_experiment("merge-audit")
    ok = len(report.trials) == 100
    for i, rec in enumerate(report.trials):
        rng = trial_rng(i)
        n = rng.randint(1, 12)
        dg = random_digraph(rng, n, rng.uniform(0.1, 0.4))
        ok &= rec["graph"] == hash_of(dg)
        k = rng.randint(1, min(4, n))
        part = Partition.from_assignment([rng.randint(1, k) for _ in range(n)])
        per_block = [random_order(rng, len(b)) for b in part.blocks]
        per_block = [[sorted(b)[j] for j in order] for b, order in zip(part.blocks, per_block)]
        state = merge_ordering(part, per_block, dg)
        h = part.block_of
        rank = {v: r for r, v in enumerate(state.order.sequence)}
        # note: members of Q_i with block index <= k_i lie in P_i
        for Qi, Pi, ki in zip(state.Q[1:], state.P[1:], state.kseq[1:]):
            ok &= all(x in Pi for x in Qi if h[x] <= ki)
        # lemma: an arc climbing over some k_n is reversed by the merged order
        for x, y in dg.arcs:
            if any(h[x] <= kn < h[y] for kn in state.kseq[1:]):
                ok &= rank[y] < rank[x]
        for seq in per_block:
            ok &= all(rank[a] < rank[b] for a, b in zip(seq, seq[1:]))
        # descent: outside Q_j, nothing reachable by an increasing path climbs
        for Qj, kj in zip(state.Q[1:], state.kseq[1:]):
            outside = set(range(n)) - Qj
            D = nx.DiGraph()
            D.add_nodes_from(outside)
            D.add_edges_from((x, y) for x, y in dg.arcs
                             if x in outside and y in outside and rank[x] < rank[y])
            reach = set()
            for s in (v for v in outside if h[v] <= kj):
                reach |= {s} | nx.descendants(D, s)
            ok &= all(h[y] <= h[x] for x, y in D.edges if x in reach)
    checks = {"experiment": verdicts_pass(report), "independent-audit": ok}
    assert announce(10, checks, "100 random digraphs"), checks


def _nx_out_core(D, side, d):
    alive = set(side)
    while True:
        bad = {v for v in alive if sum(1 for u in D.successors(v) if u in alive) < d}
        if not bad:
            return alive
        alive -= bad


def test_criterion_11(announce):
    report = run_experiment("digraph-shadow")
    trials = report.trials
    parts = {p: [t for t in trials if t["part"] == p]
             for p in ("ghrv", "z-matching", "refuse", "forward", "arc-labeling")}
    ghrv = len(parts["ghrv"]) == 60
    for i, rec in enumerate(parts["ghrv"]):
        rng = trial_rng(i)
        dg = random_digraph(rng, rng.randint(1, 6), rng.uniform(0.2, 0.6))
        ghrv &= rec["graph"] == hash_of(dg) and brute.dichromatic(brute.nx_digraph(dg)) == rec["adversarial"]
    match = len(parts["z-matching"]) == 100
    for i, rec in enumerate(parts["z-matching"]):
        rng = trial_rng(10_000 + i)
        dg = random_digraph(rng, rng.randint(2, 8), rng.uniform(0.15, 0.4), max_arcs=12)
        match &= rec["graph"] == hash_of(dg)
        lab = z_matching_edge(dg).labeling
        pos = [set(dg.arcs[a]) for a in range(dg.m) if lab[a] > 0]
        match &= all(not (a & b) for a, b in combinations(pos, 2))
        for p in increasing(brute.edge_paths_digraph(dg), lab):
            match &= all(lab[a] <= 0 for a in p[:-1])
    two = len(parts["refuse"]) == len(parts["forward"]) == 25
    for i, rec in enumerate(parts["refuse"]):
        dg, v1, v2 = directed_case_two_instance(trial_rng(20_000 + i), 2)
        two &= rec["graph"] == hash_of(dg)
        D = brute.nx_digraph(dg)
        w1 = _nx_out_core(D, v1, 2)
        w2 = _nx_out_core(D.reverse(), v2, 2)
        two &= not any(a in w2 and b in w1 for a, b in dg.arcs)
        res = z_two_sided_vertex_directed(dg, v1, v2, 2)
        if dg.n <= 14:
            two &= not _two_sided_exists(vertex_paths(D), res.labeling,
                                         res.bound_neg + 1, res.bound_pos + 1)
    for i, rec in enumerate(parts["forward"]):
        dg, lab, _ = forward_instance(trial_rng(30_000 + i), directed=True)
        two &= rec["graph"] == hash_of(dg)
        w = two_sided_forward(dg, lab, 2)
        two &= w is not None and _two_sided_witness_ok(brute.nx_digraph(dg), lab, w)
    arcs = len(parts["arc-labeling"]) == 100
    for i, rec in enumerate(parts["arc-labeling"]):
        rng = trial_rng(40_000 + i)
        dg = random_digraph(rng, rng.randint(2, 9), rng.uniform(0.15, 0.45), max_arcs=14)
        base = Ordering.from_sequence(random_order(rng, dg.n))
        prec = Ordering.from_sequence(random_order(rng, dg.n))
        arcs &= rec["graph"] == hash_of(dg)
        res = reiterman_digraph_edge(dg, base, prec)
        rest = set(res.disagree)
        ell = [min(a, key=base.key) for a in dg.arcs]
        for p in increasing(brute.edge_paths_digraph(dg), res.labeling):
            for a, b in zip(p, p[1:]):
                arcs &= not (a in rest and b not in rest)
                arcs &= not (a in rest and b in rest and prec.less(ell[a], ell[b]))
    checks = {"experiment": verdicts_pass(report), "brute-dichromatic": ghrv,
              "nx-arc-matching": match, "nx-two-sided": two, "nx-arc-labeling-claim": arcs}
    assert announce(11, checks, "digraph analogues of criteria 1, 8, 9 and the arc labeling"), checks


def test_explore_is_informational():
    report = run_experiment("explore-23", {"trials": 10, "labelings": 5})
    assert report.verdicts == {} and report.passed
    assert all(rec["checks"] == {} for rec in report.trials)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
