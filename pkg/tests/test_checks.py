from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import trees
from curvkit import errors
from curvkit.checks import (
    TheoremReport,
    comparison_check,
    degree_diameter_check,
    distance_identity_check,
    reverse_bonnet_myers_check,
)
from curvkit.curvature import NodeCurvature, steinerberger_tree_closed
from curvkit.generators import cycle_graph, path_graph, random_tree, star_graph
from curvkit.graph import build_graph

from test_curvature import INCONSISTENT_EDGES

HALF = Fraction(1, 2)


def _by_name(reports):
    return {r.theorem: r for r in reports}


def test_comparison_equality_on_example_tree(fig_tree):
    for u, v, _ in fig_tree.edges:
        eq = _by_name(comparison_check(fig_tree, u, v, HALF))["comparison-equality"]
        assert eq.applicable and eq.passed


def test_chains_on_example_tree(fig_tree):
    reps = _by_name(comparison_check(fig_tree, 4, 5, 0))
    assert reps["nonleaf-chain"].status == "PASS"
    assert reps["leaf-chain"].status == "N/A"
    reps = _by_name(comparison_check(fig_tree, 4, 8, HALF))
    assert reps["leaf-chain"].status == "PASS"
    assert reps["nonleaf-chain"].status == "N/A"


def test_equality_not_applicable_for_small_alpha():
    # two leaves of P2: 1/1 + 1/1 > 1/(1-alpha) for alpha < 1/2
    reps = _by_name(comparison_check(path_graph(2), 0, 1, Fraction(1, 4)))
    assert reps["comparison-equality"].status == "N/A"


def test_wrong_curvature_vector_fails(fig_tree):
    ks = steinerberger_tree_closed(fig_tree)
    bad = NodeCurvature(tuple(v + 1 for v in ks.values), ks.residual, True, ks.method)
    eq = _by_name(comparison_check(fig_tree, 0, 7, HALF, ks=bad))["comparison-equality"]
    assert eq.status == "FAIL"
    assert "FAIL\tcomparison-equality" in eq.line()


def test_weighted_tree_rejected():
    g = build_graph([(0, 1, 2), (1, 2, 1)])
    with pytest.raises(errors.NotCombinatorial):
        comparison_check(g, 0, 1, HALF)
    with pytest.raises(errors.NoSuchEdge):
        comparison_check(path_graph(3), 0, 2, HALF)


def test_distance_identity_example(fig_tree):
    rep = distance_identity_check(fig_tree)
    assert rep.passed
    # hop distances from node 0 sum to 36; half the volume is 9
    rep0 = distance_identity_check(fig_tree, i=0)
    assert dict(rep0.witnesses)["lhs"] == 72 == dict(rep0.witnesses)["rhs"]


def test_distance_identity_fails_off_trees():
    with pytest.raises(errors.NotATree):
        distance_identity_check(cycle_graph(5))


@settings(max_examples=60, deadline=None)
@given(trees(min_n=2, max_n=60))
def test_distance_identity_property(g):
    assert distance_identity_check(g).passed


@settings(max_examples=40, deadline=None)
@given(trees(min_n=2, max_n=25, weighted=True))
def test_weighted_distance_identity(g):
    assert distance_identity_check(g, weighted=True).passed


def test_degree_diameter_extremes():
    for n in range(3, 12):
        p = dict(degree_diameter_check(path_graph(n)).witnesses)
        assert p["D"] == n - 1 and p["bound"] == Fraction(n - 1, 2)
        s = dict(degree_diameter_check(star_graph(n)).witnesses)
        assert s["D"] == 2 and s["bound"] == Fraction(n - 1, 2 * (n - 2))


def test_reverse_bonnet_myers_example(fig_tree):
    rep = reverse_bonnet_myers_check(fig_tree)
    w = dict(rep.witnesses)
    assert rep.passed and w["norm"] == Fraction(80, 9) and w["n/D"] == Fraction(10, 6)


def test_reverse_bonnet_myers_not_applicable_when_inconsistent():
    rep = reverse_bonnet_myers_check(build_graph(INCONSISTENT_EDGES))
    assert rep.status == "N/A"


def test_reverse_bonnet_myers_on_cycle():
    # rows of the C6 distance matrix sum to 9, so k = 2/3 everywhere
    rep = reverse_bonnet_myers_check(cycle_graph(6))
    w = dict(rep.witnesses)
    assert rep.passed and w["norm"] == 4 and w["n/D"] == 2


@settings(max_examples=40, deadline=None)
@given(trees(min_n=3, max_n=40), st.sampled_from([Fraction(0), Fraction(1, 4), HALF, Fraction(3, 4)]))
def test_comparison_reports_pass_on_random_trees(g, alpha):
    ks = steinerberger_tree_closed(g)
    for u, v, _ in g.edges:
        for rep in comparison_check(g, u, v, alpha, ks=ks):
            assert rep.ok and not rep.flagged, rep.line()


def test_report_line_format():
    rep = TheoremReport("x", "inst", "a >= b", True, (("a", 1), ("b", 0)))
    assert rep.line() == "PASS\tx\tinst\ta >= b\ta=1 b=0"
    assert TheoremReport("x", "i", "p", False, applicable=False).status == "N/A"
    assert TheoremReport("x", "i", "p", True, flagged=True).status == "FLAG"


def test_random_tree_bounds():
    rng = random.Random(11)
    for _ in range(20):
        g = random_tree(rng.randint(2, 60), rng)
        assert degree_diameter_check(g).passed
        assert reverse_bonnet_myers_check(g).passed
