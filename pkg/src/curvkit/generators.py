"""Seeded graph families used by the verification suites and the tests."""

from __future__ import annotations

import heapq
import random
from fractions import Fraction
from typing import Sequence

from .graph import Graph, build_graph

# ten-node combinatorial tree used as the worked example throughout the docs
EXAMPLE_TREE_EDGES = ((0, 7), (7, 1), (1, 4), (4, 8), (4, 5), (2, 3), (3, 6), (3, 5), (5, 9))


def example_tree() -> Graph:
    return build_graph(EXAMPLE_TREE_EDGES)


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence of length ``n - 2`` into tree edges."""
    if n < 2:
        raise ValueError("a tree needs at least two nodes")
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a tree drawn uniformly from labelled trees on ``n`` nodes."""
    return prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n)


def random_weight(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 4))


def random_tree(n: int, rng: random.Random, weighted: bool = False) -> Graph:
    edges = random_tree_edges(n, rng)
    if weighted:
        return build_graph([(u, v, random_weight(rng)) for u, v in edges])
    return build_graph(edges)


def random_connected_graph(
    n: int, extra: int, rng: random.Random, weighted: bool = False
) -> Graph:
    """Random tree plus ``extra`` distinct non-tree edges (capped at complete)."""
    edges = {tuple(sorted(e)) for e in random_tree_edges(n, rng)}
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(missing)
    edges.update(missing[:extra])
    ordered = sorted(edges)
    if weighted:
        return build_graph([(u, v, random_weight(rng)) for u, v in ordered])
    return build_graph(ordered)


def random_measure(n: int, rng: random.Random, support: int | None = None) -> tuple[Fraction, ...]:
    """Random probability vector with small integer masses on a random support."""
    k = support if support is not None else rng.randint(1, n)
    nodes = rng.sample(range(n), k)
    raw = [0] * n
    for x in nodes:
        raw[x] = rng.randint(1, 6)
    total = sum(raw)
    return tuple(Fraction(r, total) for r in raw)


def path_graph(n: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` nodes: centre 0 joined to ``1..n-1``."""
    return build_graph([(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)])
