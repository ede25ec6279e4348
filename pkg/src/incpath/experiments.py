"""Named experiment pipelines with deterministic JSON reports.

Each experiment draws its random instances from ``random.Random`` seeded by
``(seed, trial index)``, records one entry per trial with the named checks
it performed, and derives one verdict per check.  A verdict lists the trials
that establish it: every participating trial when it passes, the failing
ones otherwise.  Wall-clock data lives under ``timestamp`` only, so two runs
with the same name, parameters and seed agree on everything else.
"""

from __future__ import annotations

import datetime as _dt
import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import oracles
from .core import (EDGES, VERTICES, Digraph, Hypergraph, Labeling, Ordering, ParameterError,
                   Partition, check_witness, graph)
from .families import (base_vertices, complete_hypergraph, dyadic_bipartite_h, dyadic_sides,
                       extended_clique, half_graph)
from .io import content_hash, dump_dot, dump_graph, dumps
from .peeling import (core_number, d_core, directed_paired_core_check, in_core, l_core,
                      maximal_peel, out_core, paired_core_check)
from .search import (SearchBudget, adversarial_min, branching_tree_search, greedy_c2_edge_path,
                     greedy_tree_extend, iter_branching_trees, iter_increasing_edge_paths,
                     longest_increasing_edge_path, longest_increasing_vertex_path,
                     two_sided_forward, two_sided_search)
from .synth import (block_alternating, chi_star_labeling, descent_case, merge_ordering,
                    reiterman_digraph_edge, smallest_last_coloring, type_split_hyperedge,
                    z_matching_edge, z_two_sided_vertex, z_two_sided_vertex_directed)


@dataclass
class ExperimentReport:
    experiment: str
    params: dict
    seed: int
    inputs: list
    trials: list
    verdicts: dict
    runtime: dict
    timestamp: dict = field(default_factory=dict)
    attachments: dict = field(default_factory=dict)  # DOT renderings, not serialized

    @property
    def passed(self) -> bool:
        return all(v["pass"] for v in self.verdicts.values())

    def to_obj(self) -> dict:
        return {"experiment": self.experiment, "params": self.params, "seed": self.seed,
                "inputs": self.inputs, "trials": self.trials, "verdicts": self.verdicts,
                "runtime": self.runtime, "timestamp": self.timestamp, "pass": self.passed}

    def to_json(self) -> str:
        return dumps(self.to_obj())


@dataclass(frozen=True)
class _Entry:
    fn: Callable
    defaults: dict
    summary: str


REGISTRY: dict[str, _Entry] = {}


def _register(name: str, summary: str, **defaults):
    def wrap(fn):
        REGISTRY[name] = _Entry(fn, defaults, summary)
        return fn
    return wrap


def _coerce(name: str, given: dict | None) -> dict:
    entry = REGISTRY[name]
    params = dict(entry.defaults)
    for key, val in (given or {}).items():
        if key not in params:
            raise ParameterError(f"experiment {name} has no parameter {key!r}; "
                                 f"known: {sorted(params)}")
        want = type(params[key])
        try:
            if want is bool and isinstance(val, str):
                val = val.lower() in ("1", "true", "yes")
            elif want is tuple:
                val = tuple(int(x) for x in (val.split(",") if isinstance(val, str) else val))
            else:
                val = want(val)
        except (TypeError, ValueError):
            raise ParameterError(f"parameter {key!r} expects {want.__name__}, got {val!r}") from None
        params[key] = val
    return params


def run_experiment(name: str, params: dict | None = None, seed: int = 0,
                   budget: SearchBudget | None = None) -> ExperimentReport:
    """Run a registered experiment and return its report."""
    if name not in REGISTRY:
        raise ParameterError(f"unknown experiment {name!r}; registered: {', '.join(sorted(REGISTRY))}")
    params = _coerce(name, params)
    start = time.perf_counter()
    ctx = _Context(name, seed, budget)
    REGISTRY[name].fn(ctx, **params)
    elapsed = time.perf_counter() - start
    jsonable = {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}
    verdicts = {check: ctx.verdict(check) for check in ctx.check_names}
    runtime = {"trials": len(ctx.trials), "checks": sum(len(t["checks"]) for t in ctx.trials)}
    stamp = {"utc": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
             "seconds": round(elapsed, 3)}
    return ExperimentReport(name, jsonable, seed, ctx.inputs, ctx.trials, verdicts, runtime,
                            stamp, ctx.attachments)


class _Context:
    def __init__(self, name: str, seed: int, budget: SearchBudget | None):
        self.name = name
        self.seed = seed
        self.budget = budget
        self.trials: list[dict] = []
        self.inputs: list[dict] = []
        self.check_names: list[str] = []
        self.attachments: dict[str, str] = {}
        self._hashes: set[str] = set()

    def rng(self, index: int) -> tuple[int, random.Random]:
        trial_seed = self.seed * 1_000_003 + index
        return trial_seed, random.Random(trial_seed)

    def input(self, g, **describe) -> str:
        h = content_hash(dump_graph(g))
        if h not in self._hashes:
            self._hashes.add(h)
            self.inputs.append({**describe, "hash": h})
        return h

    def record(self, checks: dict[str, bool], **data) -> dict:
        for c in checks:
            if c not in self.check_names:
                self.check_names.append(c)
        rec = {"trial": len(self.trials), **data, "checks": {k: bool(v) for k, v in checks.items()}}
        self.trials.append(rec)
        return rec

    def verdict(self, check: str) -> dict:
        involved = [t["trial"] for t in self.trials if check in t["checks"]]
        bad = [t["trial"] for t in self.trials if t["checks"].get(check) is False]
        return {"pass": not bad, "trials": bad or involved}

    def attach(self, key: str, dot: str):
        if len(self.attachments) < 20:
            self.attachments[key] = dot


# ---------------------------------------------------------------------------
# Random instance generators
# ---------------------------------------------------------------------------


def random_order(rng: random.Random, size: int) -> list[int]:
    seq = list(range(size))
    rng.shuffle(seq)
    return seq


def random_labeling(rng: random.Random, size: int, target: str = VERTICES) -> Labeling:
    return Labeling.from_sequence(random_order(rng, size), target)


def random_graph(rng: random.Random, n: int, m: int) -> Hypergraph:
    pairs = list(combinations(range(n), 2))
    return graph(n, sorted(rng.sample(pairs, min(m, len(pairs)))))


def random_connected_graph(rng: random.Random, max_edges: int = 12, max_n: int = 9) -> Hypergraph:
    n = rng.randint(2, min(max_n, max_edges + 1))
    perm = random_order(rng, n)
    edges = {tuple(sorted((perm[v], perm[rng.randrange(v)]))) for v in range(1, n)}
    others = [p for p in combinations(range(n), 2) if p not in edges]
    extra = rng.randint(0, min(max_edges - len(edges), len(others)))
    edges |= set(rng.sample(others, extra))
    return graph(n, sorted(edges))


def random_digraph(rng: random.Random, n: int, p: float, max_arcs: int | None = None) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    if max_arcs is not None and len(arcs) > max_arcs:
        arcs = sorted(rng.sample(arcs, max_arcs))
    return Digraph(n, tuple(arcs))


def random_linear_3graph(rng: random.Random, max_edges: int = 10) -> Hypergraph:
    n = rng.randint(6, 10)
    target = rng.randint(2, max_edges)
    edges: list[frozenset[int]] = []
    for _ in range(200):
        if len(edges) >= target:
            break
        t = frozenset(rng.sample(range(n), 3))
        if all(len(t & e) <= 1 for e in edges):
            edges.append(t)
    return Hypergraph(3, n, tuple(tuple(sorted(e)) for e in edges))


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------


@_register("ghrv-oracle", "adversarial vertex-path minimum versus chromatic number", max_n=6)
def _ghrv(ctx: _Context, max_n: int):
    import networkx as nx

    if not 1 <= max_n <= 7:
        raise ParameterError("max_n must lie in 1..7 (graph atlas range)")
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(G):
            continue
        g = graph(n, sorted(tuple(sorted(e)) for e in G.edges()))
        h = ctx.input(g, family="atlas", n=n)
        chi = oracles.chromatic_number(g)
        adv = adversarial_min(g, "vertex-path", "exact", ctx.budget)
        ctx.record({"ghrv": chi == adv.value}, graph=h, n=n, m=g.m, chi=chi, adversarial=adv.value)


def _ghrv_directed(ctx: _Context, trials: int, max_n: int):
    for i in range(trials):
        s, rng = ctx.rng(i)
        dg = random_digraph(rng, rng.randint(1, max_n), rng.uniform(0.2, 0.6))
        h = ctx.input(dg, family="random-digraph", trial_seed=s)
        chi = oracles.dichromatic_number(dg)
        adv = adversarial_min(dg, "vertex-path", "exact", ctx.budget)
        ctx.record({"directed-ghrv": chi == adv.value}, part="ghrv", seed=s, graph=h,
                   dichromatic=chi, adversarial=adv.value)


@_register("rm-shadow", "half-graph growth and peeling certificates on trees",
           max_n=40, trials=100, tree_max=10)
def _rm_shadow(ctx: _Context, max_n: int, trials: int, tree_max: int):
    import networkx as nx

    for n in range(1, max_n + 1):
        g = half_graph(n)
        ctx.input(g, family="HalfGraph", n=n)
        need = int(math.floor(math.log2(n)))
        lengths = []
        for t in range(trials):
            _, rng = ctx.rng(n * 10_000 + t)
            lab = random_labeling(rng, g.n)
            lengths.append(longest_increasing_vertex_path(g, lab).length)
        ctx.record({"half-graph-growth": min(lengths) >= need}, part="half-graph", n=n,
                   need=need, min_length=min(lengths), max_length=max(lengths))
    for order in range(1, tree_max + 1):
        trees = [nx.empty_graph(1)] if order == 1 else nx.nonisomorphic_trees(order)
        for T in trees:
            g = graph(order, sorted(tuple(sorted(e)) for e in T.edges()))
            h = ctx.input(g, family="tree", n=order)
            colour = smallest_last_coloring(g)
            lab = chi_star_labeling(g, Partition.from_assignment(colour))
            peel = maximal_peel(g, lab)
            longest = longest_increasing_vertex_path(g, lab).length
            brute = oracles.longest_increasing_vertex_path(g, lab)
            ctx.record({"tree-core-empty": not d_core(g, 2).core,
                        "peel-certificate": longest == brute <= peel.k <= max(colour)},
                       part="tree", graph=h, n=order, rounds=peel.k, colours=max(colour),
                       longest=longest)


@_register("block-alternating", "line-graph distance block labelings on random graphs",
           trials=200, max_edges=12)
def _block_alt(ctx: _Context, trials: int, max_edges: int):
    for i in range(trials):
        s, rng = ctx.rng(i)
        g = random_connected_graph(rng, max_edges)
        h = ctx.input(g, family="random-connected", trial_seed=s)
        seed_edge = rng.randrange(g.m)
        res = block_alternating(g, seed_edge)
        where = res.block_of()
        absorbed, spans = True, 1
        paths = oracles.increasing_edge_paths(g, res.labeling)
        for p in paths:
            blocks = [where[e][1] for e in p]
            spans = max(spans, len(set(blocks)))
            for a, b in zip(blocks, blocks[1:]):
                if a % 2 == 0 and b != a:
                    absorbed = False
        longest = max(len(p) for p in paths)
        fast = longest_increasing_edge_path(g, res.labeling, ctx.budget).length
        ctx.record({"even-absorption": absorbed, "window-bound": longest <= res.window_bound(),
                    "search-agrees": fast == longest},
                   seed=s, graph=h, seed_edge=seed_edge, longest=longest,
                   window=res.window_bound(), blocks_used=spans)


@_register("typesplit-audit", "type I / type II split on random linear 3-graphs",
           trials=100, max_edges=10)
def _typesplit(ctx: _Context, trials: int, max_edges: int):
    for i in range(trials):
        s, rng = ctx.rng(i)
        h = random_linear_3graph(rng, max_edges)
        hid = ctx.input(h, family="random-linear-3graph", trial_seed=s)
        base = Ordering.from_sequence(random_order(rng, h.n))
        prec = Ordering.from_sequence(random_order(rng, h.n))
        res = type_split_hyperedge(h, base, prec)
        two = set(res.type_two)
        ell = [x.ell for x in res.extrema]
        returns = literal = branch = 0
        example = None
        paths = oracles.increasing_edge_paths(h, res.labeling)
        for p in paths:
            for a, b in zip(p, p[1:]):
                if a in two and b not in two:
                    returns += 1
            if not all(e in two for e in p):
                continue
            for a, b in zip(p, p[1:]):
                climbs = prec.less(ell[a], ell[b])
                if climbs:
                    literal += 1
                    example = example or [list(h.edges[a]), list(h.edges[b])]
                    if descent_case(res, a, b, h) is not None:
                        branch += 1
            for a, b, c in zip(p, p[1:], p[2:]):
                if ell[a] == ell[b] == ell[c]:
                    literal += 1
                    branch += 1
        ctx.record({"no-return-to-type-one": returns == 0,
                    "literal-ell-descent": literal == 0,
                    "branch-ell-descent": branch == 0},
                   seed=s, graph=hid, m=h.m, type_one=len(res.type_one), type_two=len(two),
                   paths=len(paths), literal_violations=literal, first_violation=example)


@_register("hyper-c2-greedy", "greedy branching trees and greedy edge paths in complete 3-graphs",
           ns=(9, 15, 21), trials=50)
def _c2_greedy(ctx: _Context, ns: tuple, trials: int):
    for n in ns:
        h = complete_hypergraph(3, n)
        ctx.input(h, family="CompleteHypergraph", k=3, n=n)
        core = l_core(h, 3, 2).core
        pair_core = l_core(h, 2, 2).core
        depth = max(1, (n - 3) // 6)
        for t in range(trials):
            s, rng = ctx.rng(n * 10_000 + t)
            lab = random_labeling(rng, h.n)
            greedy = greedy_tree_extend(h, lab, core, depth)
            ok = greedy.witness is not None and not check_witness(greedy.witness, h, lab)
            found = branching_tree_search(h, lab, depth, ctx.budget)
            confirm = found is not None and not check_witness(found, h, lab)
            elab = random_labeling(rng, h.m, EDGES)
            path = greedy_c2_edge_path(h, elab, pair_core, max_len=4)
            path_ok = not check_witness(path, h, elab)
            ctx.record({"greedy-tree": ok, "search-confirms": confirm, "greedy-edge-path": path_ok},
                       n=n, seed=s, depth=depth, greedy_levels=greedy.levels_built,
                       edge_path_length=path.length)
            if t == 0 and n <= 9 and greedy.witness is not None:
                ctx.attach(f"tree-n{n}", dump_dot(h, lab, greedy.witness))


@_register("counterexample", "extended clique: branch vertices stay in the base", trials=500)
def _counterexample(ctx: _Context, trials: int):
    h = extended_clique(3, 4)
    hid = ctx.input(h, family="ExtendedClique", k=3, n=4)
    base = set(base_vertices(h))
    core2 = set(l_core(h, 2, 3).core)
    core3 = set(l_core(h, 3, 2).core)
    ctx.record({"l2-core-is-base": core2 == base and bool(core2), "l3-core-empty": not core3},
               part="cores", graph=hid, l2_core=sorted(core2), l3_core=sorted(core3))
    for t in range(trials):
        s, rng = ctx.rng(t)
        lab = random_labeling(rng, h.n)
        inner_ok, count = True, 0
        for w in iter_branching_trees(h, lab, 2):
            count += 1
            inner = [v for v, lv in zip(w.vertices, w.levels) if 0 < lv < w.depth]
            inner_ok &= all(v in base for v in inner)
        deeper = branching_tree_search(h, lab, 3)
        ctx.record({"internal-vertices-in-base": inner_ok, "no-depth-three": deeper is None},
                   seed=s, depth_two_trees=count)


@_register("fin-family", "dyadic bipartite family: structure, cores, growth",
           max_n=64, trials=100, brute_n=12)
def _fin(ctx: _Context, max_n: int, trials: int, brute_n: int):
    for n in range(2, max_n + 1):
        g, e1, e2 = dyadic_bipartite_h(n, split=True)
        ctx.input(g, family="DyadicBipartiteH", n=n)
        left, right = map(set, dyadic_sides(n))
        bip = all((u in left) != (v in left) for u, v in g.edges)
        d0 = max(core_number(g), default=0) + 1
        checks = {"bipartite": bip, "disjoint-halves": not (e1 & e2),
                  "core-empty-at-d0": not d_core(g, d0).core,
                  "core-nonempty-below-d0": d0 == 1 or bool(d_core(g, d0 - 1).core)}
        data = {"n": n, "m": g.m, "d0": d0}
        if n <= brute_n:
            checks["brute-core-empty-at-d0"] = not _brute_has_core(g, d0)
            below = set(d_core(g, d0 - 1).core)
            checks["brute-witness-below-d0"] = d0 == 1 or (
                bool(below) and all(len(g.adjacency[v] & below) >= d0 - 1 for v in below))
        ctx.record(checks, part="structure", **data)
    g = dyadic_bipartite_h(max_n)
    for t in range(trials):
        s, rng = ctx.rng(t)
        lab = random_labeling(rng, g.n)
        length = longest_increasing_vertex_path(g, lab).length
        ctx.record({"growth-at-max-n": length >= 4}, part="growth", seed=s, length=length)


def _brute_has_core(g: Hypergraph, d: int) -> bool:
    # one-shot prune: a vertex of degree < d lies in no subset of min degree >= d
    keep = [v for v in range(g.n) if len(g.adjacency[v]) >= d]
    index = {v: i for i, v in enumerate(keep)}
    bits = [sum(1 << index[u] for u in g.adjacency[v] if u in index) for v in keep]
    return oracles.min_degree_subset_exists(bits, len(keep), d)


def _matching_checks(g, res, paths) -> dict[str, bool]:
    lab = res.labeling
    sets = [frozenset(a) for a in g.arcs] if isinstance(g, Digraph) else g.edge_sets
    pos = [e for e in range(len(sets)) if lab[e] > 0]
    disjoint = all(not (sets[a] & sets[b]) for a, b in combinations(pos, 2))
    final = all(sum(1 for e in p if lab[e] > 0) <= 1 and all(lab[e] <= 0 for e in p[:-1])
                for p in paths)
    return {"positives-disjoint": disjoint, "positive-only-last": final}


@_register("z-matching", "integer edge labeling from a maximal matching", trials=200, max_edges=12)
def _zmatch(ctx: _Context, trials: int, max_edges: int):
    for i in range(trials):
        s, rng = ctx.rng(i)
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.randint(1, max_edges))
        h = ctx.input(g, family="random-graph", trial_seed=s)
        res = z_matching_edge(g)
        paths = oracles.increasing_edge_paths(g, res.labeling)
        checks = _matching_checks(g, res, paths)
        checks["enumerators-agree"] = sorted(paths) == sorted(iter_increasing_edge_paths(g, res.labeling))
        ctx.record(checks, seed=s, graph=h, m=g.m, matching=len(res.matching), paths=len(paths))


def _relabel(n: int, edges, rng: random.Random):
    perm = random_order(rng, n)
    return perm, [tuple(perm[v] for v in e) for e in edges]


def case_two_instance(rng: random.Random, d: int = 2):
    """Random graph with a partition ``V1, V2`` whose ``d``-cores are never
    joined: each side has a core of minimum degree ``d`` plus tree-like
    attachments, and crossing edges avoid core-core pairs."""
    sides = []
    edges = []
    nxt = 0
    for _ in range(2):
        a = rng.randint(d + 1, 5)
        core = list(range(nxt, nxt + a))
        nxt += a
        for i in range(a):
            edges.append((core[i], core[(i + 1) % a]))  # cycle, min degree 2
        for x, y in combinations(core, 2):
            if rng.random() < 0.3 and (x, y) not in edges and (y, x) not in edges:
                edges.append((x, y))
        extra = list(range(nxt, nxt + rng.randint(1, 4)))
        nxt += len(extra)
        for j, u in enumerate(extra):
            earlier = core + extra[:j]
            if rng.random() < 0.8:
                edges.append((rng.choice(earlier), u))
        sides.append((core, extra))
    (w1, u1), (w2, u2) = sides
    cross = [(x, y) for x in w1 + u1 for y in w2 + u2 if not (x in w1 and y in w2)]
    edges += rng.sample(cross, rng.randint(1, min(5, len(cross))))
    perm, edges = _relabel(nxt, edges, rng)
    g = graph(nxt, sorted({tuple(sorted(e)) for e in edges}))
    v1 = {perm[v] for v in w1 + u1}
    v2 = {perm[v] for v in w2 + u2}
    return g, v1, v2


def forward_instance(rng: random.Random, directed: bool = False):
    """Two cliques (complete digraphs when directed) of size 6..8 inside the
    two sides, pendant extras, a sign-split random labeling and one
    core-to-core edge leaving at least three core vertices on each side."""
    a, b = rng.randint(6, 8), rng.randint(6, 8)
    w1 = list(range(a))
    w2 = list(range(a, a + b))
    nxt = a + b
    u1 = list(range(nxt, nxt + rng.randint(0, 3)))
    nxt += len(u1)
    u2 = list(range(nxt, nxt + rng.randint(0, 3)))
    nxt += len(u2)
    pairs = [p for W in (w1, w2) for p in combinations(W, 2)]
    for u in u1:
        pairs.append((rng.choice(w1), u))
    for u in u2:
        pairs.append((rng.choice(w2), u))
    v1, v2 = w1 + u1, w2 + u2
    pos = random_order(rng, len(v1))
    neg = random_order(rng, len(v2))
    lab = Labeling.from_split([v2[i] for i in neg], [v1[i] for i in pos], VERTICES)
    low1 = sorted(w1, key=lab.__getitem__)[: a - 2]
    high2 = sorted(w2, key=lab.__getitem__)[2:]
    x, y = rng.choice(low1), rng.choice(high2)
    if directed:
        arcs = [(p, q) for p, q in pairs] + [(q, p) for p, q in pairs if p in w1 + w2 and q in w1 + w2]
        arcs.append((y, x))
        return Digraph(nxt, tuple(sorted(set(arcs)))), lab, (y, x)
    pairs.append((x, y))
    return graph(nxt, sorted({tuple(sorted(p)) for p in pairs})), lab, (x, y)


@_register("z-twosided", "integer vertex labelings with and without joined cores",
           trials=50, d=2, brute_n=14)
def _ztwo(ctx: _Context, trials: int, d: int, brute_n: int):
    for i in range(trials):
        s, rng = ctx.rng(i)
        g, v1, v2 = case_two_instance(rng, d)
        h = ctx.input(g, family="case-two", trial_seed=s)
        check = paired_core_check(g, v1, v2, d)
        res = z_two_sided_vertex(g, v1, v2, d)
        none = two_sided_search(g, res.labeling, res.bound_neg + 1, res.bound_pos + 1) is None
        checks = {"paired-check-false": not check.found, "certificate-holds": none}
        if g.n <= brute_n:
            checks["brute-paired-agrees"] = oracles.paired_brute(g, v1, v2, d) == check.found
            checks["brute-certificate"] = not oracles.two_sided_brute(
                g, res.labeling, res.bound_neg + 1, res.bound_pos + 1)
        ctx.record(checks, part="refuse", seed=s, graph=h, n=g.n,
                   bound_pos=res.bound_pos, bound_neg=res.bound_neg)
    for i in range(trials):
        s, rng = ctx.rng(100_000 + i)
        g, lab, bridge = forward_instance(rng)
        h = ctx.input(g, family="forward", trial_seed=s)
        v1 = [v for v in range(g.n) if lab[v] >= 0]
        v2 = [v for v in range(g.n) if lab[v] < 0]
        found = paired_core_check(g, v1, v2, d).found
        w = two_sided_forward(g, lab, d)
        ok = (w is not None and not check_witness(w, g, lab)
              and w.meta["negatives"] >= 3 and w.meta["nonnegatives"] >= 3)
        ctx.record({"paired-check-true": found, "forward-witness": ok}, part="forward", seed=s,
                   graph=h, negatives=w.meta["negatives"] if w else 0,
                   nonnegatives=w.meta["nonnegatives"] if w else 0)
        if i == 0 and w is not None:
            ctx.attach("forward-0", dump_dot(g, lab, w))


@_register("merge-audit", "merged orderings of random digraph partitions", trials=100, max_n=12)
def _merge(ctx: _Context, trials: int, max_n: int):
    for i in range(trials):
        s, rng = ctx.rng(i)
        n = rng.randint(1, max_n)
        dg = random_digraph(rng, n, rng.uniform(0.1, 0.4))
        h = ctx.input(dg, family="random-digraph", trial_seed=s)
        k = rng.randint(1, min(4, n))
        assign = [rng.randint(1, k) for _ in range(n)]
        part = Partition.from_assignment(assign)
        per_block = [random_order(rng, len(b)) for b in part.blocks]
        per_block = [[sorted(b)[j] for j in order] for b, order in zip(part.blocks, per_block)]
        state = merge_ordering(part, per_block, dg)
        audit = state.audit()
        ctx.record({name: not v for name, v in audit.items()}, seed=s, graph=h, n=n, blocks=k,
                   violations={name: v[:3] for name, v in audit.items() if v})


def directed_case_two_instance(rng: random.Random, d: int = 2):
    """Directed analogue: an out-core in ``V1``, an in-core in ``V2`` and no
    arc from the in-core into the out-core."""
    nxt = 0
    arcs: set[tuple[int, int]] = set()
    parts = []
    for side in range(2):
        a = rng.randint(d + 1, 5)
        core = list(range(nxt, nxt + a))
        nxt += a
        for x in core:
            others = [y for y in core if y != x]
            for y in rng.sample(others, d):
                arcs.add((x, y) if side == 0 else (y, x))
        extra = list(range(nxt, nxt + rng.randint(1, 3)))
        nxt += len(extra)
        for j, u in enumerate(extra):
            earlier = core + extra[:j]
            t = rng.choice(earlier)
            if side == 0:
                # one out-arc to earlier vertices at most; in-arcs are free
                arcs.add((u, t) if rng.random() < 0.5 else (t, u))
            else:
                arcs.add((t, u) if rng.random() < 0.5 else (u, t))
        parts.append((core, extra))
    (w1, u1), (w2, u2) = parts
    cross = [(x, y) for x in w1 + u1 for y in w2 + u2] + \
            [(y, x) for x in w1 + u1 for y in w2 + u2 if not (x in w1 and y in w2)]
    arcs |= set(rng.sample(cross, rng.randint(1, 5)))
    perm = random_order(rng, nxt)
    dg = Digraph(nxt, tuple(sorted((perm[u], perm[v]) for u, v in arcs)))
    return dg, {perm[v] for v in w1 + u1}, {perm[v] for v in w2 + u2}


@_register("digraph-shadow", "directed analogues: dichromatic oracle, matchings, cores, arc labeling",
           trials=100, ghrv_trials=60, ghrv_max_n=6, twosided_trials=25, d=2)
def _digraph(ctx: _Context, trials: int, ghrv_trials: int, ghrv_max_n: int,
             twosided_trials: int, d: int):
    _ghrv_directed(ctx, ghrv_trials, ghrv_max_n)
    for i in range(trials):
        s, rng = ctx.rng(10_000 + i)
        dg = random_digraph(rng, rng.randint(2, 8), rng.uniform(0.15, 0.4), max_arcs=12)
        h = ctx.input(dg, family="random-digraph", trial_seed=s)
        res = z_matching_edge(dg)
        paths = oracles.increasing_edge_paths(dg, res.labeling)
        checks = {"arc-" + k: v for k, v in _matching_checks(dg, res, paths).items()}
        ctx.record(checks, part="z-matching", seed=s, graph=h, paths=len(paths))
    for i in range(twosided_trials):
        s, rng = ctx.rng(20_000 + i)
        dg, v1, v2 = directed_case_two_instance(rng, d)
        h = ctx.input(dg, family="directed-case-two", trial_seed=s)
        check = directed_paired_core_check(dg, v1, v2, d)
        res = z_two_sided_vertex_directed(dg, v1, v2, d)
        none = two_sided_search(dg, res.labeling, res.bound_neg + 1, res.bound_pos + 1) is None
        brute1 = set(out_core(dg, d, v1).core) == set(oracles.max_out_core_brute(dg, d, v1))
        brute2 = set(in_core(dg, d, v2).core) == set(oracles.max_out_core_brute(dg.reversed(), d, v2))
        checks = {"directed-paired-false": not check.found, "directed-certificate": none,
                  "directed-cores-brute": brute1 and brute2}
        if dg.n <= 14:
            checks["directed-paired-brute"] = oracles.directed_paired_brute(dg, v1, v2, d) == check.found
            checks["directed-certificate-brute"] = not oracles.two_sided_brute(
                dg, res.labeling, res.bound_neg + 1, res.bound_pos + 1)
        ctx.record(checks, part="refuse", seed=s, graph=h)
    for i in range(twosided_trials):
        s, rng = ctx.rng(30_000 + i)
        dg, lab, _ = forward_instance(rng, directed=True)
        h = ctx.input(dg, family="directed-forward", trial_seed=s)
        w = two_sided_forward(dg, lab, d)
        ok = (w is not None and not check_witness(w, dg, lab)
              and w.meta["negatives"] >= 3 and w.meta["nonnegatives"] >= 3)
        ctx.record({"directed-forward": ok}, part="forward", seed=s, graph=h)
    for i in range(trials):
        s, rng = ctx.rng(40_000 + i)
        dg = random_digraph(rng, rng.randint(2, 9), rng.uniform(0.15, 0.45), max_arcs=14)
        h = ctx.input(dg, family="random-digraph", trial_seed=s)
        base = Ordering.from_sequence(random_order(rng, dg.n))
        prec = Ordering.from_sequence(random_order(rng, dg.n))
        res = reiterman_digraph_edge(dg, base, prec)
        rest = set(res.disagree)
        climbs = back = 0
        for p in oracles.increasing_edge_paths(dg, res.labeling):
            for a, b in zip(p, p[1:]):
                if a in rest and b not in rest:
                    back += 1
                if a in rest and b in rest and prec.less(res.ell(dg, a), res.ell(dg, b)):
                    climbs += 1
        ctx.record({"claim-audit": not res.claim_violations(dg) and climbs == 0,
                    "no-return-to-agreeing-arcs": not res.return_violations(dg) and back == 0},
                   part="arc-labeling", seed=s, graph=h, agree=len(res.agree), rest=len(rest))


@_register("explore-23", "search for C2-less 3-graphs whose sampled edge labelings all keep long paths",
           trials=60, labelings=20, d=2, min_length=3)
def _explore(ctx: _Context, trials: int, labelings: int, d: int, min_length: int):
    best = None
    for i in range(trials):
        s, rng = ctx.rng(i)
        h = random_linear_3graph(rng, 10)
        if l_core(h, 2, d).core:
            continue
        hid = ctx.input(h, family="random-linear-3graph", trial_seed=s)
        worst = min(longest_increasing_edge_path(h, random_labeling(rng, h.m, EDGES), ctx.budget).length
                    for _ in range(labelings))
        candidate = worst >= min_length
        if best is None or worst > best[0]:
            best = (worst, hid)
        # informational: a candidate is not a counterexample, nothing is asserted
        ctx.record({}, seed=s, graph=hid, m=h.m, min_sampled_longest=worst, candidate=candidate)
    ctx.inputs.append({"best_min_sampled_longest": best[0] if best else None,
                       "best_graph": best[1] if best else None})


__all__ = ["ExperimentReport", "REGISTRY", "run_experiment", "random_labeling", "random_graph",
           "random_connected_graph", "random_digraph", "random_linear_3graph", "case_two_instance",
           "forward_instance", "directed_case_two_instance"]
