"""Canonical JSON, edge-list text and DOT formats.

External vertex ids are whatever the input used (JSON numbers or strings);
internally they become the dense ids ``0..n-1`` and are kept in ``names``.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .core import (EDGES, INT, NAT, VERTICES, Digraph, DomainError, Hypergraph,
                   IncreasingWitness, Labeling, WitnessKind, validate, validate_digraph)


class ParseError(DomainError):
    """Malformed input; ``line`` and ``col`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.col = col


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def dumps(obj: Any) -> str:
    """Deterministic JSON (sorted keys, two-space indent, trailing newline)."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def content_hash(text: str | bytes) -> str:
    data = text.encode() if isinstance(text, str) else text
    return "sha256:" + hashlib.sha256(data).hexdigest()


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


def hypergraph_to_obj(h: Hypergraph) -> dict:
    return {"k": h.k, "vertices": list(h.names),
            "edges": [[h.names[v] for v in e] for e in h.edges]}


def digraph_to_obj(d: Digraph) -> dict:
    return {"vertices": list(d.names), "arcs": [[d.names[u], d.names[v]] for u, v in d.arcs]}


def graph_from_obj(obj: Any) -> Hypergraph | Digraph:
    if not isinstance(obj, dict):
        raise ParseError("graph JSON must be an object")
    if "vertices" not in obj:
        raise ParseError("graph JSON needs a 'vertices' list")
    vertices = obj["vertices"]
    if not isinstance(vertices, list):
        raise ParseError("'vertices' must be a list")
    if "arcs" in obj:
        arcs = obj["arcs"]
        if not isinstance(arcs, list) or any(not isinstance(a, list) or len(a) != 2 for a in arcs):
            raise ParseError("'arcs' must be a list of [u, v] pairs")
        d = Digraph.from_arcs([tuple(a) for a in arcs], vertices)
        problems = validate_digraph(d)
        if problems:
            raise DomainError("invalid digraph: " + "; ".join(problems))
        return d
    if "edges" not in obj or "k" not in obj:
        raise ParseError("hypergraph JSON needs 'k' and 'edges' (or 'arcs' for a digraph)")
    edges = obj["edges"]
    if not isinstance(edges, list) or any(not isinstance(e, list) for e in edges):
        raise ParseError("'edges' must be a list of lists")
    h = Hypergraph.from_edges(int(obj["k"]), edges, vertices)
    problems = validate(h)
    if problems:
        raise DomainError("invalid hypergraph: " + "; ".join(problems))
    return h


def load_graph(text: str) -> Hypergraph | Digraph:
    return graph_from_obj(_loads(text))


def dump_graph(g: Hypergraph | Digraph) -> str:
    return dumps(digraph_to_obj(g) if isinstance(g, Digraph) else hypergraph_to_obj(g))


# ---------------------------------------------------------------------------
# Labelings
# ---------------------------------------------------------------------------


def _edge_key(g, e: int) -> str:
    """Key naming an edge in a labeling map: its edge id as a string."""
    return str(e)


def labeling_to_obj(lab: Labeling, g: Hypergraph | Digraph) -> dict:
    if lab.target == VERTICES:
        mapping = {str(g.names[v]): lab[v] for v in range(len(lab))}
    else:
        mapping = {_edge_key(g, e): lab[e] for e in range(len(lab))}
    return {"target": lab.target, "kind": lab.kind, "map": mapping}


def labeling_from_obj(obj: Any, g: Hypergraph | Digraph) -> Labeling:
    if not isinstance(obj, dict) or not {"target", "kind", "map"} <= obj.keys():
        raise ParseError("labeling JSON needs 'target', 'kind' and 'map'")
    target, kind, mapping = obj["target"], obj["kind"], obj["map"]
    if target not in (VERTICES, EDGES) or kind not in (NAT, INT):
        raise ParseError(f"bad labeling target/kind {target!r}/{kind!r}")
    if not isinstance(mapping, dict):
        raise ParseError("'map' must be an object")
    if target == VERTICES:
        index = {str(name): v for v, name in enumerate(g.names)}
        size = g.n
    else:
        index = {str(e): e for e in range(g.m)}
        size = g.m
    values = [None] * size
    for key, val in mapping.items():
        if key not in index:
            raise DomainError(f"labeling mentions unknown {target[:-1]} {key!r}")
        values[index[key]] = int(val)
    missing = [k for k, i in index.items() if values[i] is None]
    if missing:
        raise DomainError(f"labeling misses {target} {missing[:5]}")
    return Labeling(tuple(values), target, kind)


def load_labeling(text: str, g: Hypergraph | Digraph) -> Labeling:
    return labeling_from_obj(_loads(text), g)


def dump_labeling(lab: Labeling, g: Hypergraph | Digraph) -> str:
    return dumps(labeling_to_obj(lab, g))


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


def witness_to_obj(w: IncreasingWitness | None, g: Hypergraph | Digraph, exhaustive: bool = True) -> dict:
    if w is None:
        return {"result": "none", "exhaustive": bool(exhaustive)}
    obj = {"kind": WitnessKind(w.kind).value, "vertices": [g.names[v] for v in w.vertices],
           "edges": list(w.edges), "length": w.length}
    if w.levels is not None:
        obj["levels"] = list(w.levels)
    return obj


# ---------------------------------------------------------------------------
# Edge-list text and DOT
# ---------------------------------------------------------------------------


def _token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def load_edge_list(text: str, directed: bool = False) -> Hypergraph | Digraph:
    """One edge per line, vertices separated by whitespace; ``#`` comments.

    A line with a single token declares an isolated vertex.  All edges must
    have the same size, which becomes the uniformity.
    """
    vertices: dict = {}
    edges: list[tuple] = []
    k = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = line.split()
        if not toks:
            continue
        vals = [_token(t) for t in toks]
        for v in vals:
            vertices.setdefault(v, None)
        if len(vals) == 1:
            continue
        if k is None:
            k = len(vals)
        elif len(vals) != k:
            col = raw.index(toks[0]) + 1
            raise ParseError(f"edge has {len(vals)} vertices, expected {k}", lineno, col)
        edges.append(tuple(vals))
    if directed:
        if k not in (None, 2):
            raise ParseError("arcs must have exactly two endpoints")
        g = Digraph.from_arcs(edges, list(vertices))
        problems = validate_digraph(g)
    else:
        g = Hypergraph.from_edges(k or 2, edges, list(vertices))
        problems = validate(g)
    if problems:
        raise DomainError("invalid edge list: " + "; ".join(problems))
    return g


def dump_edge_list(g: Hypergraph | Digraph) -> str:
    lines = []
    pairs = g.arcs if isinstance(g, Digraph) else g.edges
    appearance = list(dict.fromkeys(v for e in pairs for v in e))
    if appearance != list(range(g.n)):
        # declare every vertex up front so the reader recovers the id order
        lines += [str(name) for name in g.names]
    for e in pairs:
        lines.append(" ".join(str(g.names[v]) for v in e))
    return "\n".join(lines) + ("\n" if lines else "")


def _dot_id(name) -> str:
    return json.dumps(str(name))


def dump_dot(g: Hypergraph | Digraph, lab: Labeling | None = None,
             highlight: IncreasingWitness | None = None) -> str:
    """Graphviz DOT for graphs and digraphs (hypergraphs become incidence graphs)."""
    directed = isinstance(g, Digraph)
    hot_edges = set(highlight.edges) if highlight else set()
    hot_vertices = set(highlight.vertices) if highlight else set()
    out = ["digraph G {" if directed else "graph G {"]
    for v in range(g.n):
        attrs = []
        if lab is not None and lab.target == VERTICES:
            attrs.append(f'label="{g.names[v]}:{lab[v]}"')
        if v in hot_vertices:
            attrs.append("color=red")
        out.append(f"  {_dot_id(g.names[v])}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    sep = " -> " if directed else " -- "
    pairs = g.arcs if directed else g.edges
    if not directed and g.k > 2:
        for i, e in enumerate(pairs):
            hub = _dot_id(f"e{i}")
            out.append(f"  {hub} [shape=point];")
            for v in e:
                out.append(f"  {hub} -- {_dot_id(g.names[v])};")
    else:
        for i, (u, v) in enumerate(pairs):
            attrs = []
            if lab is not None and lab.target == EDGES:
                attrs.append(f'label="{lab[i]}"')
            if i in hot_edges:
                attrs.append("color=red")
            out.append(f"  {_dot_id(g.names[u])}{sep}{_dot_id(g.names[v])}"
                       + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "ParseError", "dumps", "content_hash", "hypergraph_to_obj", "digraph_to_obj", "graph_from_obj",
    "load_graph", "dump_graph", "labeling_to_obj", "labeling_from_obj", "load_labeling",
    "dump_labeling", "witness_to_obj", "load_edge_list", "dump_edge_list", "dump_dot",
]
