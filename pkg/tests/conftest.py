from __future__ import annotations

import math
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import strategies as st

from curvkit.generators import example_tree, prufer_to_edges
from curvkit.graph import Graph, build_graph


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def fig_tree() -> Graph:
    return example_tree()


def to_networkx(g: Graph, weighted: bool = False) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v, w in g.edges:
        h.add_edge(u, v, weight=w if weighted else 1)
    return h


def networkx_w1(g, mu, nu, weighted=False):
    """W1 by networkx min-cost flow on integer-scaled supplies and costs."""
    scale = math.lcm(*(x.denominator for x in list(mu) + list(nu)))
    wscale = math.lcm(*(w.denominator for _, _, w in g.edges)) if weighted else 1
    h = nx.DiGraph()
    for i in range(g.n):
        h.add_node(i, demand=int((nu[i] - mu[i]) * scale))
    # explicit capacities: networkx's stand-in for infinity is too small here
    cap = scale
    for u, v, w in g.edges:
        c = int(w * wscale) if weighted else 1
        h.add_edge(u, v, weight=c, capacity=cap)
        h.add_edge(v, u, weight=c, capacity=cap)
    return Fraction(nx.min_cost_flow_cost(h), scale * wscale)


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 30, weighted: bool | None = False):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    edges = prufer_to_edges(seq, n)
    use_weights = draw(st.booleans()) if weighted is None else weighted
    if use_weights:
        ws = draw(
            st.lists(
                st.fractions(min_value=1, max_value=9, max_denominator=4).filter(lambda w: w > 0),
                min_size=n - 1,
                max_size=n - 1,
            )
        )
        return build_graph([(u, v, w) for (u, v), w in zip(edges, ws)])
    return build_graph(edges)


@st.composite
def connected_graphs(draw, min_n: int = 3, max_n: int = 8):
    from curvkit.generators import random_connected_graph

    n = draw(st.integers(min_n, max_n))
    extra = draw(st.integers(1, max(1, n * (n - 1) // 2 - (n - 1))))
    seed = draw(st.integers(0, 2**32 - 1))
    weighted = draw(st.booleans())
    return random_connected_graph(n, extra, random.Random(seed), weighted=weighted)
