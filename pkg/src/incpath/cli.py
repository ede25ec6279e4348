"""Command-line interface.

Exit codes: 0 success, 1 a verdict failed, 2 usage or input error,
3 a search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (ArtifactError, BudgetExhausted, Digraph, DomainError,
                   Ordering, ParameterError, Partition, Refusal)
from .experiments import REGISTRY, run_experiment
from .families import FAMILIES, FamilySpec
from .io import (ParseError, dump_dot, dump_edge_list, dump_graph, dump_labeling, dumps,
                 load_edge_list, load_graph, load_labeling, witness_to_obj)
from .peeling import (d_core, directed_paired_core_check, in_core, l_core, maximal_peel,
                      out_core, paired_core_check)
from .search import (SearchBudget, adversarial_min, branching_tree_search,
                     longest_increasing_edge_path, longest_increasing_edge_trail,
                     longest_increasing_vertex_path, loose_path_search, skip_increasing_search,
                     two_sided_search)
from .synth import (acyclic_class_labeling, acyclic_classes, block_alternating,
                    chi_star_labeling, merge_ordering, reiterman_digraph_edge,
                    smallest_last_coloring, type_split_hyperedge, z_matching_edge,
                    z_two_sided_vertex, z_two_sided_vertex_directed)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SEARCH_KINDS = ("vertex-path", "edge-path", "edge-trail", "loose-path", "skip-increasing",
                "branching-tree", "two-sided")
CONSTRUCTIONS = ("block-alternating", "type-split", "chi-star", "z-matching", "z-two-sided",
                 "reiterman-edge", "merge")


class _Usage(ArtifactError):
    pass


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str):
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_dot(args, text: str, name: str = "out.dot"):
    if not args.dot_out:
        return
    path = args.dot_out
    if os.path.isdir(path):
        path = os.path.join(path, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _budget(args) -> SearchBudget:
    nodes = SearchBudget().max_nodes if args.budget_nodes is None else args.budget_nodes
    return SearchBudget(max_nodes=nodes, time_limit=args.budget_secs)


def _graph(args):
    if not args.graph:
        raise _Usage("--graph is required")
    return load_graph(_read(args.graph))


def _ids(g, text: str | None) -> list[int]:
    """Comma-separated vertex names to internal ids."""
    if text is None:
        return []
    index = {str(name): v for v, name in enumerate(g.names)}
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        if tok not in index:
            raise DomainError(f"unknown vertex {tok!r}")
        out.append(index[tok])
    return out


def _ordering(g, text: str | None) -> Ordering:
    if text is None:
        return Ordering.identity(g.n)
    seq = _ids(g, text)
    if sorted(seq) != list(range(g.n)):
        raise DomainError("an order must list every vertex exactly once")
    return Ordering.from_sequence(seq)


def _partition(g, path: str | None) -> Partition | None:
    """``{"blocks": [[names, least first], ...]}``."""
    if path is None:
        return None
    obj = json.loads(_read(path))
    if not isinstance(obj, dict) or not isinstance(obj.get("blocks"), list):
        raise ParseError("partition JSON needs a 'blocks' list")
    return [_ids(g, ",".join(str(x) for x in b)) for b in obj["blocks"]]


def _params(pairs: list[str]) -> dict:
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise _Usage(f"parameter {p!r} is not key=value")
        k, v = p.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _names(g, ids) -> list:
    return [g.names[v] for v in sorted(ids)]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    params = _params(args.params)
    try:
        spec = FamilySpec(args.family, {k: int(v) for k, v in params.items()})
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    g = spec.expand()
    if args.dot:
        if g.k != 2:
            raise DomainError("--dot is only available for 2-uniform families")
        _emit(args, dump_dot(g))
    else:
        _emit(args, dump_graph(g))
    _write_dot(args, dump_dot(g), f"{args.family}.dot")
    return EXIT_OK


def cmd_core(args) -> int:
    g = _graph(args)
    directed = isinstance(g, Digraph)
    kind = args.kind
    if kind == "paired":
        v1 = _ids(g, args.v1)
        v2 = [v for v in range(g.n) if v not in set(v1)] if args.v2 is None else _ids(g, args.v2)
        check = (directed_paired_core_check if directed else paired_core_check)(g, v1, v2, args.thr)
        obj = {"found": check.found, "w1": _names(g, check.w1), "w2": _names(g, check.w2),
               "crossing": [g.names[v] for v in check.crossing] if check.crossing else None}
        _emit(args, dumps(obj))
        return EXIT_OK
    if kind in ("out", "in"):
        if not directed:
            raise DomainError(f"--kind {kind} needs a digraph")
        res = (out_core if kind == "out" else in_core)(g, args.thr)
    elif directed:
        raise DomainError(f"--kind {kind} needs an undirected (hyper)graph")
    elif kind == "d":
        res = d_core(g, args.thr)
    else:
        if args.l is None:
            raise _Usage("--kind l needs --l")
        res = l_core(g, args.l, args.thr)
    obj = {"core": _names(g, res.core),
           "elimination": [{"vertex": g.names[e.vertex], "round": e.round} for e in res.elimination]}
    _emit(args, dumps(obj))
    return EXIT_OK


def cmd_synth(args) -> int:
    g = _graph(args)
    directed = isinstance(g, Digraph)
    c = args.construction
    cert: dict = {"construction": c}
    order_out = None
    lab = None
    if c == "block-alternating":
        res = block_alternating(g, args.seed_edge)
        lab = res.labeling
        cert.update(seed_edge=args.seed_edge, window_bound=res.window_bound(),
                    components=[[list(b) for b in comp] for comp in res.components])
    elif c == "type-split":
        if directed:
            raise DomainError("type-split needs a hypergraph")
        res = type_split_hyperedge(g, _ordering(g, args.base), _ordering(g, args.order))
        lab = res.labeling
        cert.update(type_one=list(res.type_one), type_two=list(res.type_two))
    elif c == "chi-star":
        blocks = _partition(g, args.partition)
        if directed:
            assign = acyclic_classes(g) if blocks is None else None
            part = Partition.from_assignment(assign) if blocks is None else Partition(blocks, g.n)
            lab = acyclic_class_labeling(g, part)
        else:
            assign = smallest_last_coloring(g) if blocks is None else None
            part = Partition.from_assignment(assign) if blocks is None else Partition(blocks, g.n)
            lab = chi_star_labeling(g, part)
            cert["peel_rounds"] = maximal_peel(g, lab).k
        cert["blocks"] = [_names(g, b) for b in part.blocks]
        cert["bound"] = longest_increasing_vertex_path(g, lab).length
    elif c == "z-matching":
        res = z_matching_edge(g)
        lab = res.labeling
        cert["matching"] = list(res.matching)
    elif c == "z-two-sided":
        v1 = _ids(g, args.v1)
        v2 = [v for v in range(g.n) if v not in set(v1)]
        build = z_two_sided_vertex_directed if directed else z_two_sided_vertex
        res = build(g, v1, v2, args.d)
        lab = res.labeling
        cert.update({k: v for k, v in res.certificate.items() if k not in ("w1", "w2")})
        cert.update(w1=_names(g, res.w1), w2=_names(g, res.w2))
    elif c == "reiterman-edge":
        if not directed:
            raise DomainError("reiterman-edge needs a digraph")
        res = reiterman_digraph_edge(g, _ordering(g, args.base), _ordering(g, args.order))
        lab = res.labeling
        cert.update(agree=list(res.agree), claim_violations=res.claim_violations(g),
                    return_violations=res.return_violations(g))
    elif c == "merge":
        blocks = _partition(g, args.partition)
        if blocks is None:
            raise _Usage("merge needs --partition")
        part = Partition(blocks, g.n)
        state = merge_ordering(part, blocks, g)
        order_out = [g.names[v] for v in state.order.sequence]
        cert["audit"] = state.audit()
        cert["order"] = order_out
    if lab is not None:
        text = dump_labeling(lab, g)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            _emit(args, text)
        _write_dot(args, dump_dot(g, lab), f"{c}.dot")
    else:
        _emit(args, dumps({"order": order_out}))
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            fh.write(dumps(cert))
    ok = all(not v for v in cert.get("audit", {}).values())
    ok = ok and not cert.get("claim_violations") and not cert.get("return_violations")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args) -> int:
    g = _graph(args)
    if not args.labeling:
        raise _Usage("--labeling is required")
    lab = load_labeling(_read(args.labeling), g)
    budget = _budget(args)
    stats: dict = {}
    kind = args.kind
    if kind == "vertex-path":
        w = longest_increasing_vertex_path(g, lab)
    elif kind == "edge-path":
        w = longest_increasing_edge_path(g, lab, budget, stats)
    elif kind == "edge-trail":
        _emit(args, dumps({"kind": "EdgeTrail", "length": longest_increasing_edge_trail(g, lab)}))
        return EXIT_OK
    elif kind == "loose-path":
        w = loose_path_search(g, lab, args.target or 1, budget, stats)
    elif kind == "skip-increasing":
        w = skip_increasing_search(g, lab, args.target or 1, budget, stats)
    elif kind == "branching-tree":
        w = branching_tree_search(g, lab, args.target or 1, budget, stats)
    else:
        w = two_sided_search(g, lab, args.min_neg, args.min_pos)
    if w is not None and args.target and kind in ("vertex-path", "edge-path") and w.length < args.target:
        w = None
    _emit(args, dumps(witness_to_obj(w, g, stats.get("exhaustive", True))))
    if w is not None:
        _write_dot(args, dump_dot(g, lab, w), f"{kind}.dot")
    return EXIT_OK


def cmd_adversarial(args) -> int:
    g = _graph(args)
    res = adversarial_min(g, args.kind, args.mode, _budget(args), seed=args.seed)
    obj = {"kind": args.kind, "mode": args.mode, "value": res.value, "exact": res.exact,
           "evaluations": res.evaluations, "seed": args.seed,
           "labeling": json.loads(dump_labeling(res.labeling, g))}
    _emit(args, dumps(obj))
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.list or not args.name:
        for name in sorted(REGISTRY):
            e = REGISTRY[name]
            defaults = " ".join(f"{k}={','.join(map(str, v)) if isinstance(v, tuple) else v}"
                                for k, v in e.defaults.items())
            print(f"{name:18s} {e.summary}  [{defaults}]")
        return EXIT_OK
    budget = _budget(args) if args.budget_nodes or args.budget_secs else None
    report = run_experiment(args.name, _params(args.param), args.seed, budget)
    _emit(args, report.to_json())
    if args.dot_out:
        os.makedirs(args.dot_out, exist_ok=True)
        for key, dot in report.attachments.items():
            with open(os.path.join(args.dot_out, f"{args.name}-{key}.dot"), "w", encoding="utf-8") as fh:
                fh.write(dot)
    for check, v in report.verdicts.items():
        print(f"{'PASS' if v['pass'] else 'FAIL'} {check}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_convert(args) -> int:
    src = _read(args.input)
    if args.from_fmt == "canonical-json":
        g = load_graph(src)
    else:
        g = load_edge_list(src, directed=args.directed)
    if args.to_fmt == "canonical-json":
        text = dump_graph(g)
    elif args.to_fmt == "edge-list-text":
        text = dump_edge_list(g)
    else:
        text = dump_dot(g)
    _emit(args, text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    p.add_argument("--budget-nodes", type=int, default=argparse.SUPPRESS,
                   help="search node budget (default 2000000)")
    p.add_argument("--budget-secs", type=float, default=argparse.SUPPRESS,
                   help="search time budget in seconds")
    p.add_argument("--json-out", default=argparse.SUPPRESS, help="write JSON here instead of stdout")
    p.add_argument("--dot-out", default=argparse.SUPPRESS, help="DOT file (or directory) for witnesses")
    return p


GLOBAL_DEFAULTS = {"seed": 0, "budget_nodes": None, "budget_secs": None, "json_out": None,
                   "dot_out": None}


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="incpath", parents=[common],
                                     description="Increasing paths, cores and adversarial labelings.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("gen", parents=[common], help="generate a family member as canonical JSON")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("--dot", action="store_true", help="emit DOT instead (2-uniform only)")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("core", parents=[common], help="cores and the paired core check")
    p.add_argument("--graph", "--in", dest="graph", required=True)
    p.add_argument("--kind", choices=("d", "l", "out", "in", "paired"), required=True)
    p.add_argument("--thr", type=int, required=True, help="degree threshold d")
    p.add_argument("--l", type=int, help="intersection size for --kind l")
    p.add_argument("--v1", help="comma-separated names of V1 (paired)")
    p.add_argument("--v2", help="comma-separated names of V2 (default: the rest)")
    p.set_defaults(fn=cmd_core)

    p = sub.add_parser("synth", parents=[common], help="build an adversarial labeling")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.add_argument("--graph", "--in", dest="graph", required=True)
    p.add_argument("--order", help="well-ordering as comma-separated names, least first")
    p.add_argument("--base", help="base order as comma-separated names, least first")
    p.add_argument("--partition", help="JSON file {\"blocks\": [[names...], ...]}")
    p.add_argument("--v1", help="comma-separated names of V1 (z-two-sided)")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed-edge", type=int, default=0)
    p.add_argument("--out", help="labeling output file")
    p.add_argument("--certificate", help="certificate output file")
    p.set_defaults(fn=cmd_synth)

    p = sub.add_parser("search", parents=[common], help="search an increasing structure")
    p.add_argument("kind", choices=SEARCH_KINDS)
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--target", type=int, help="required length (or tree depth)")
    p.add_argument("--min-neg", type=int, default=1)
    p.add_argument("--min-pos", type=int, default=1)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("adversarial", parents=[common], help="minimise the longest increasing path")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=("vertex-path", "edge-path"), default="vertex-path")
    p.add_argument("--mode", choices=("exact", "anneal"), default="exact")
    p.set_defaults(fn=cmd_adversarial)

    p = sub.add_parser("experiment", parents=[common], help="run a named experiment")
    p.add_argument("name", nargs="?")
    p.add_argument("--param", "-p", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("convert", parents=[common], help="convert between graph formats")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--from", dest="from_fmt", choices=("canonical-json", "edge-list-text"),
                   default="canonical-json")
    p.add_argument("--to", dest="to_fmt", choices=("canonical-json", "edge-list-text", "dot"),
                   required=True)
    p.add_argument("--directed", action="store_true", help="read edge lists as arcs")
    p.set_defaults(fn=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, val in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, val)
    try:
        return args.fn(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Refusal as exc:
        print(f"refused: {exc}; counterexample {exc.counterexample}", file=sys.stderr)
        return EXIT_FAIL
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (_Usage, ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"parse error: {exc.msg} at line {exc.lineno}, column {exc.colno}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
