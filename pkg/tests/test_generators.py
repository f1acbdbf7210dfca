from __future__ import annotations

import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_networkx
from curvkit.generators import (
    example_tree,
    prufer_to_edges,
    random_connected_graph,
    random_measure,
    random_tree,
)
from curvkit.graph import is_tree


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
))
def test_prufer_decoding_matches_networkx(case):
    n, seq = case
    ours = {frozenset(e) for e in prufer_to_edges(seq, n)}
    ref = {frozenset(e) for e in nx.from_prufer_sequence(seq).edges()} if n > 2 else {frozenset((0, 1))}
    assert ours == ref


def test_prufer_rejects_bad_length():
    with pytest.raises(ValueError):
        prufer_to_edges([0, 1], 3)
    with pytest.raises(ValueError):
        prufer_to_edges([], 1)


def test_random_trees_cover_all_labelled_trees():
    # Cayley: 4^2 = 16 labelled trees on 4 nodes, each should appear about 1/16 of the time
    rng = random.Random(0)
    counts = Counter(frozenset(map(frozenset, (e[:2] for e in random_tree(4, rng).edges))) for _ in range(8000))
    assert len(counts) == 16
    assert min(counts.values()) > 350 and max(counts.values()) < 650


def test_random_tree_is_reproducible():
    a = random_tree(30, random.Random("x"), weighted=True)
    b = random_tree(30, random.Random("x"), weighted=True)
    assert a.edges == b.edges and is_tree(a)
    assert all(w > 0 for _, _, w in a.edges)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 10), st.integers(0, 40), st.integers(0, 2**32 - 1))
def test_random_connected_graph(n, extra, seed):
    g = random_connected_graph(n, extra, random.Random(seed))
    assert g.m == min(n - 1 + extra, n * (n - 1) // 2)
    assert nx.is_connected(to_networkx(g))


def test_random_measure_is_probability():
    rng = random.Random(2)
    for _ in range(50):
        mu = random_measure(7, rng)
        assert sum(mu) == 1 and min(mu) >= 0
    assert sum(1 for x in random_measure(7, rng, support=3) if x) == 3


def test_example_tree_shape():
    g = example_tree()
    assert g.n == 10 and g.m == 9
    assert sorted(g.degrees) == [1, 1, 1, 1, 1, 2, 2, 3, 3, 3]
