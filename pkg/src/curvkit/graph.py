"""Weighted undirected graphs, hop distances, and tree geometry.

Nodes are relabelled to ``0..n-1`` on ingestion (sorted by original id) and the
original ids are kept in :attr:`Graph.node_ids`.  Edges are stored with
``tail < head`` in sorted order; that enumeration is the oriented edge set used
by every flow vector in the package.
"""

from __future__ import annotations

import heapq
import os
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    Disconnected,
    DuplicateEdge,
    GraphError,
    NonpositiveWeight,
    NoSuchEdge,
    NotATree,
    ParseError,
    SelfLoop,
    TooLarge,
)

DEFAULT_MAX_NODES = 10_000


def max_nodes() -> int:
    """Size bound for dense n x n work; ``CURVKIT_MAX_N`` overrides it."""
    raw = os.environ.get("CURVKIT_MAX_N")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_NODES
    return int(raw)


def as_rational(value) -> Fraction:
    """Convert ints, fractions, ``"p/q"`` and decimal strings to an exact Fraction.

    Floats are converted through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    return Fraction(value)


class OrientedEdge(NamedTuple):
    tail: int
    head: int
    index: int


class _Rooted(NamedTuple):
    order: tuple[int, ...]  # BFS order from node 0
    parent: tuple[int, ...]  # -1 at the root
    parent_edge: tuple[int, ...]  # index of the edge to the parent, -1 at the root
    depth: tuple[int, ...]


class Graph:
    """Simple connected undirected graph with positive rational weights.

    Treat instances as immutable; derived data (hop distances, the rooted
    spanning structure of a tree) is computed lazily and cached.
    """

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int, Fraction]],
        node_ids: Sequence | None = None,
    ):
        self.n = n
        self.edges: tuple[tuple[int, int, Fraction], ...] = tuple(edges)
        self.node_ids = tuple(node_ids) if node_ids is not None else tuple(range(n))
        self.edge_index: dict[tuple[int, int], int] = {
            (u, v): k for k, (u, v, _) in enumerate(self.edges)
        }
        adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        self.adjacency: tuple[tuple[tuple[int, Fraction], ...], ...] = tuple(
            tuple(sorted(row)) for row in adj
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(x for x, _ in self.adjacency[i])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_index

    def weight(self, i: int, j: int) -> Fraction:
        try:
            return self.edges[self.edge_index[(min(i, j), max(i, j))]][2]
        except KeyError:
            raise NoSuchEdge(f"{{{i}, {j}}} is not an edge") from None

    def oriented_edges(self) -> list[OrientedEdge]:
        return [OrientedEdge(u, v, k) for k, (u, v, _) in enumerate(self.edges)]

    @cached_property
    def is_unit_weight(self) -> bool:
        return all(w == 1 for _, _, w in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @cached_property
    def weighted_degrees(self) -> tuple[Fraction, ...]:
        return tuple(sum((w for _, w in row), Fraction(0)) for row in self.adjacency)

    @cached_property
    def hops(self) -> np.ndarray:
        if self.n > max_nodes():
            raise TooLarge(f"n={self.n} exceeds the node bound {max_nodes()}")
        if is_tree(self):
            out = _tree_hops(self)
        else:
            rows = [u for u, _, _ in self.edges]
            cols = [v for _, v, _ in self.edges]
            adj = csr_matrix((np.ones(self.m), (rows, cols)), shape=(self.n, self.n))
            dist = shortest_path(adj, directed=False, unweighted=True)
            out = dist.astype(np.int64)
        out.setflags(write=False)
        return out

    @cached_property
    def weighted_distances(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(_dijkstra(self, s) for s in range(self.n))

    @cached_property
    def rooted(self) -> _Rooted:
        if not is_tree(self):
            raise NotATree("operation requires a tree")
        parent = [-1] * self.n
        parent_edge = [-1] * self.n
        depth = [0] * self.n
        order = [0]
        seen = [False] * self.n
        seen[0] = True
        for u in order:
            for v, _ in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    parent_edge[v] = self.edge_index[(min(u, v), max(u, v))]
                    depth[v] = depth[u] + 1
                    order.append(v)
        return _Rooted(tuple(order), tuple(parent), tuple(parent_edge), tuple(depth))


def _tree_hops(g: Graph) -> np.ndarray:
    # In preorder a subtree is a contiguous block; moving from a parent to a
    # child adds one hop to everything outside the child's block and removes
    # one inside it.
    n = g.n
    parent = [-1] * n
    order = []
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for v, _ in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    pos = [0] * n
    for k, u in enumerate(order):
        pos[u] = k
    size = [1] * n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    depth = [0] * n
    for u in order[1:]:
        depth[u] = depth[parent[u]] + 1
    D = np.empty((n, n), dtype=np.int64)  # rows and columns in preorder
    D[0] = [depth[u] for u in order]
    for k in range(1, n):
        u = order[k]
        row = D[k]
        row[:] = D[pos[parent[u]]]
        row += 1
        row[k : k + size[u]] -= 2
    perm = np.array(pos)
    return np.ascontiguousarray(D[np.ix_(perm, perm)])


def _dijkstra(g: Graph, source: int) -> tuple[Fraction, ...]:
    dist: list[Fraction | None] = [None] * g.n
    heap = [(Fraction(0), source)]
    while heap:
        d, u = heapq.heappop(heap)
        if dist[u] is not None:
            continue
        dist[u] = d
        for v, w in g.adjacency[u]:
            if dist[v] is None:
                heapq.heappush(heap, (d + w, v))
    return tuple(dist)  # type: ignore[arg-type]


def build_graph(edge_list: Iterable[Sequence]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Args:
        edge_list: items ``(u, v)`` or ``(u, v, w)`` with integer node ids
            ``>= 0``.  A missing weight means 1; weights may be ints,
            fractions, floats, or strings such as ``"3/4"`` or ``"0.25"``.

    Raises:
        SelfLoop, DuplicateEdge, NonpositiveWeight, Disconnected, GraphError.
    """
    raw: list[tuple[int, int, Fraction]] = []
    for item in edge_list:
        if len(item) == 2:
            u, v = item
            w = Fraction(1)
        elif len(item) == 3:
            u, v, w = item
            w = as_rational(w)
        else:
            raise GraphError(f"edge must be (u, v) or (u, v, w), got {item!r}")
        if not all(_is_int(x) for x in (u, v)):
            raise GraphError(f"node ids must be integers, got {u!r}, {v!r}")
        u, v = int(u), int(v)
        if u < 0 or v < 0:
            raise GraphError(f"node ids must be non-negative, got {u}, {v}")
        if u == v:
            raise SelfLoop(f"self-loop at node {u}")
        if w <= 0:
            raise NonpositiveWeight(f"edge {{{u}, {v}}} has weight {w}")
        raw.append((u, v, w))
    if not raw:
        raise GraphError("graph has no edges")

    ids = sorted({x for u, v, _ in raw for x in (u, v)})
    label = {x: k for k, x in enumerate(ids)}
    seen: set[tuple[int, int]] = set()
    edges = []
    for u, v, w in raw:
        a, b = sorted((label[u], label[v]))
        if (a, b) in seen:
            raise DuplicateEdge(f"edge {{{u}, {v}}} appears more than once")
        seen.add((a, b))
        edges.append((a, b, w))
    edges.sort()
    g = Graph(len(ids), edges, ids)
    if not _connected(g):
        raise Disconnected("graph is not connected")
    return g


def _is_int(x) -> bool:
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def _connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v, _ in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def parse_edge_list(text: str) -> Graph:
    """Parse the ``u v [w]`` edge-list format (``#`` starts a comment line)."""
    items = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"line {lineno}: expected 'u v [w]', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = as_rational(parts[2]) if len(parts) == 3 else Fraction(1)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        items.append((u, v, w))
    if not items:
        raise ParseError("no edges in input")
    return build_graph(items)


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.node_ids[u]} {g.node_ids[v]} {w}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1


def degree(g: Graph, i: int) -> tuple[int, Fraction]:
    """Return ``(combinatorial degree, weighted degree)`` of node ``i``."""
    return g.degrees[i], g.weighted_degrees[i]


def volume(g: Graph) -> Fraction:
    return sum(g.weighted_degrees, Fraction(0))


def distance_matrix(g: Graph, weighted: bool = False) -> np.ndarray:
    """All-pairs shortest path distances.

    The default is the hop count (edge weights ignored), returned as an int64
    array.  ``weighted=True`` gives least-total-weight distances as an object
    array of Fractions; that mode only exists for the weighted-tree variant of
    the distance identity.
    """
    if not weighted:
        return g.hops
    return np.array(g.weighted_distances, dtype=object)


def diameter(g: Graph) -> int:
    return int(g.hops.max())


def geodesic(g: Graph, i: int, j: int) -> tuple[int, ...]:
    """The unique simple path ``(i, ..., j)`` in a tree."""
    r = g.rooted
    left, right = [i], [j]
    a, b = i, j
    while r.depth[a] > r.depth[b]:
        a = r.parent[a]
        left.append(a)
    while r.depth[b] > r.depth[a]:
        b = r.parent[b]
        right.append(b)
    while a != b:
        a, b = r.parent[a], r.parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def _as_edge(g: Graph, e) -> tuple[int, int]:
    tail, head = int(e[0]), int(e[1])
    if not g.has_edge(tail, head):
        raise NoSuchEdge(f"{{{tail}, {head}}} is not an edge")
    return tail, head


def subtree_side(g: Graph, e) -> frozenset[int]:
    """Nodes of the component of ``g - e`` that contains the tail of ``e``.

    ``e`` is an :class:`OrientedEdge` or any ``(tail, head)`` pair; the pair
    order decides which side is returned.
    """
    if not is_tree(g):
        raise NotATree("subtree_side requires a tree")
    tail, head = _as_edge(g, e)
    side = {tail}
    stack = [tail]
    while stack:
        u = stack.pop()
        for v, _ in g.adjacency[u]:
            if v not in side and not (u == tail and v == head):
                side.add(v)
                stack.append(v)
    return frozenset(side)


def apply_incidence(g: Graph, flow: Sequence) -> list:
    """Divergence ``B @ flow`` of a flow on the oriented edges, without forming B."""
    if len(flow) != g.m:
        raise ValueError(f"flow has length {len(flow)}, graph has {g.m} edges")
    out: list = [0] * g.n
    for (u, v, _), value in zip(g.edges, flow):
        out[u] += value
        out[v] -= value
    return out
