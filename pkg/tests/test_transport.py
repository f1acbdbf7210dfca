from __future__ import annotations

import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from conftest import connected_graphs, networkx_w1, to_networkx, trees
from curvkit import errors
from curvkit.generators import path_graph, random_measure
from curvkit.graph import apply_incidence, build_graph
from curvkit.transport import (
    as_measure,
    coupling_marginals,
    dirac,
    lazy_walk_measure,
    tree_edge_cumulant,
    w1,
    w1_lp_oracle,
    w1_mincost_flow,
    w1_tree,
)


def scipy_w1(g, mu, nu):
    n = g.n
    D = np.asarray(g.hops, dtype=float)
    A = np.zeros((2 * n, n * n))
    for i in range(n):
        for j in range(n):
            A[i, i * n + j] = 1
            A[n + j, i * n + j] = 1
    b = np.array([float(x) for x in nu] + [float(x) for x in mu])
    return linprog(D.ravel(), A_eq=A, b_eq=b, method="highs").fun


def test_dirac_on_path():
    g = path_graph(3)
    mu, nu = dirac(3, 0), dirac(3, 2)
    for res in (w1_tree(g, mu, nu), w1_mincost_flow(g, mu, nu), w1_lp_oracle(g, mu, nu)):
        assert res.cost == 2
    assert w1_tree(g, mu, nu).witness == (1, 1)


def test_lazy_measures_on_example_tree(fig_tree):
    m0 = lazy_walk_measure(fig_tree, 0, Fraction(1, 2))
    m7 = lazy_walk_measure(fig_tree, 7, Fraction(1, 2))
    assert m0[0] == Fraction(1, 2) and m0[7] == Fraction(1, 2)
    assert m7[7] == Fraction(1, 2) and m7[0] == m7[1] == Fraction(1, 4)
    # orc(0,7) = 1/2 gives W1 = 1/2 across the unit edge
    assert w1_tree(fig_tree, m0, m7).cost == Fraction(1, 2)
    assert w1_lp_oracle(fig_tree, m0, m7).cost == Fraction(1, 2)


def test_non_adjacent_example_pair(fig_tree):
    a = Fraction(1, 2)
    m1, m4 = lazy_walk_measure(fig_tree, 1, a), lazy_walk_measure(fig_tree, 4, a)
    costs = {w1_tree(fig_tree, m1, m4).cost, w1_mincost_flow(fig_tree, m1, m4).cost}
    costs.add(w1_lp_oracle(fig_tree, m1, m4).cost)
    assert costs == {Fraction(7, 6)}


def test_lazy_walk_weights():
    g = build_graph([(0, 1, 1), (0, 2, 3)])
    m = lazy_walk_measure(g, 0, Fraction(1, 4))
    assert m == (Fraction(1, 4), Fraction(3, 16), Fraction(9, 16))


def test_cumulant_is_tail_side_mass(fig_tree):
    mu = dirac(10, 0)
    K = tree_edge_cumulant(fig_tree, mu)
    # node 0 lies on the tail side of (0, 7) and on the head side of (1, 7)
    assert K[fig_tree.edge_index[(0, 7)]] == 1
    assert K[fig_tree.edge_index[(1, 7)]] == 0


@pytest.mark.parametrize(
    "values, n",
    [
        (["1/2", "1/2", "0"], 2),
        (["-1", "1", "1"], 3),
        (["1/2", "1/4", "0"], 3),
        (["x", "1", "0"], 3),
    ],
)
def test_measure_validation(values, n):
    with pytest.raises(errors.MeasureError):
        as_measure(values, n)


def test_alpha_range():
    with pytest.raises(errors.AlphaOutOfRange):
        lazy_walk_measure(path_graph(2), 0, 1)
    with pytest.raises(errors.AlphaOutOfRange):
        lazy_walk_measure(path_graph(2), 0, "-1/4")


def test_lp_size_bound():
    with pytest.raises(errors.TooLarge):
        w1_lp_oracle(path_graph(70), dirac(70, 0), dirac(70, 1))


def _measures(g, seed):
    rng = random.Random(seed)
    return random_measure(g.n, rng), random_measure(g.n, rng)


@settings(max_examples=80, deadline=None)
@given(trees(min_n=2, max_n=12, weighted=None), st.integers(0, 2**32 - 1))
def test_tree_flow_matches_networkx_and_mcf(g, seed):
    mu, nu = _measures(g, seed)
    for weighted in (False, True):
        ref = networkx_w1(g, mu, nu, weighted)
        tf = w1_tree(g, mu, nu, weighted)
        mcf = w1_mincost_flow(g, mu, nu, weighted)
        assert tf.cost == mcf.cost == ref
        target = [a - b for a, b in zip(mu, nu)]
        assert apply_incidence(g, tf.witness) == target
        assert apply_incidence(g, mcf.witness) == target


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.integers(0, 2**32 - 1))
def test_mcf_and_lp_on_general_graphs(g, seed):
    mu, nu = _measures(g, seed)
    mcf = w1_mincost_flow(g, mu, nu)
    lp = w1_lp_oracle(g, mu, nu)
    assert mcf.cost == lp.cost == networkx_w1(g, mu, nu)
    assert abs(float(lp.cost) - scipy_w1(g, mu, nu)) < 1e-9
    assert coupling_marginals(lp.witness) == (mu, nu)
    assert apply_incidence(g, mcf.witness) == [a - b for a, b in zip(mu, nu)]
    # the coupling's transport cost is the reported value
    assert sum(
        lp.witness[i][j] * int(g.hops[i, j]) for i in range(g.n) for j in range(g.n)
    ) == lp.cost


@settings(max_examples=40, deadline=None)
@given(connected_graphs(), st.integers(0, 2**32 - 1))
def test_w1_is_a_metric(g, seed):
    rng = random.Random(seed)
    a, b, c = (random_measure(g.n, rng) for _ in range(3))
    assert w1(g, a, a).cost == 0
    assert w1(g, a, b).cost == w1(g, b, a).cost
    assert w1(g, a, c).cost <= w1(g, a, b).cost + w1(g, b, c).cost
    # W1 between Diracs is the hop distance
    assert w1(g, dirac(g.n, 0), dirac(g.n, g.n - 1)).cost == g.hops[0, g.n - 1]


def test_networkx_oracle_sanity():
    g = path_graph(4)
    assert networkx_w1(g, dirac(4, 0), dirac(4, 3)) == 3
    assert nx.is_tree(to_networkx(g))
