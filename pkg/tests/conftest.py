import os
import sys
from itertools import combinations

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from incpath.core import EDGES, VERTICES, Digraph, Labeling, graph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return graph(n, sorted(chosen))


@st.composite
def digraphs(draw, min_n=1, max_n=6, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Digraph(n, tuple(sorted(chosen)))


def labelings(size, target=VERTICES):
    return st.permutations(list(range(size))).map(lambda p: Labeling.from_sequence(p, target))


@st.composite
def graph_with_vertex_labeling(draw, **kw):
    g = draw(graphs(**kw))
    return g, draw(labelings(g.n))


@st.composite
def graph_with_edge_labeling(draw, **kw):
    g = draw(graphs(**kw))
    return g, draw(labelings(g.m, EDGES))


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
