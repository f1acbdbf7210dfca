"""Probability measures on nodes and three exact 1-Wasserstein evaluators.

``w1_tree`` uses the closed-form edge-cumulant flow available on trees,
``w1_mincost_flow`` solves the flow formulation on any connected graph by
successive shortest paths, and ``w1_lp_oracle`` solves the coupling LP with an
exact simplex.  All three use the hop metric unless ``weighted=True``, in which
case every evaluator charges edge weights instead, consistently.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import AlphaOutOfRange, MeasureError, TooLarge
from .graph import Graph, as_rational, is_tree
from .simplex import solve_lp

Measure = tuple  # dense node-indexed tuple of Fractions summing to exactly 1
EdgeFlow = tuple  # rationals indexed by oriented-edge index

LP_MAX_NODES = 64


@dataclass(frozen=True)
class TransportResult:
    """W1 value with the flow or coupling that attains it.

    ``witness`` is an :data:`EdgeFlow` for ``tree-flow`` and ``mcf``; for
    ``lp-oracle`` it is the dense ``n x n`` coupling as a tuple of row tuples,
    with row sums equal to ``nu`` and column sums equal to ``mu``.
    """

    cost: Fraction
    witness: Union[EdgeFlow, tuple]
    method: str


def as_measure(values: Sequence, n: int | None = None) -> Measure:
    """Validate and convert a vector to an exact probability measure."""
    try:
        out = tuple(as_rational(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise MeasureError(str(exc)) from exc
    if n is not None and len(out) != n:
        raise MeasureError(f"measure has {len(out)} entries, graph has {n} nodes")
    if any(x < 0 for x in out):
        raise MeasureError("measure has a negative entry")
    if sum(out) != 1:
        raise MeasureError(f"measure sums to {sum(out)}, not 1")
    return out


def dirac(n: int, i: int) -> Measure:
    return tuple(Fraction(int(k == i)) for k in range(n))


def check_alpha(alpha) -> Fraction:
    a = as_rational(alpha)
    if not 0 <= a < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {a}")
    return a


def lazy_walk_measure(g: Graph, i: int, alpha) -> Measure:
    """One step of the alpha-lazy random walk started at ``i``.

    Keeps mass ``alpha`` at ``i`` and sends ``(1 - alpha) * w_ix / deg_w(i)``
    to each neighbour ``x``.
    """
    a = check_alpha(alpha)
    out = [Fraction(0)] * g.n
    out[i] = a
    spread = (1 - a) / g.weighted_degrees[i]
    for x, w in g.adjacency[i]:
        out[x] = spread * w
    return tuple(out)


def tree_edge_cumulant(g: Graph, mu: Sequence) -> EdgeFlow:
    """Mass of ``mu`` on the tail side of each oriented edge of a tree.

    Runs one post-order accumulation over the tree rooted at node 0.
    """
    r = g.rooted
    sub = list(mu)
    for v in reversed(r.order[1:]):
        sub[r.parent[v]] += sub[v]
    total = sub[0]
    out = [Fraction(0)] * g.m
    for v in r.order[1:]:
        k = r.parent_edge[v]
        # the child's subtree is the tail side exactly when the child is the tail
        out[k] = sub[v] if g.edges[k][0] == v else total - sub[v]
    return tuple(out)


def w1_tree(g: Graph, mu: Sequence, nu: Sequence, weighted: bool = False) -> TransportResult:
    """Exact W1 on a tree from the unique feasible flow ``K_mu - K_nu``."""
    r = g.rooted
    sub = [a - b for a, b in zip(mu, nu)]
    for v in reversed(r.order[1:]):
        if sub[v]:
            sub[r.parent[v]] += sub[v]
    flow = [Fraction(0)] * g.m
    cost = Fraction(0)
    for v in r.order[1:]:
        s = sub[v]
        if not s:
            continue
        k = r.parent_edge[v]
        flow[k] = s if g.edges[k][0] == v else -s
        cost += abs(s) * g.edges[k][2] if weighted else abs(s)
    return TransportResult(cost, tuple(flow), "tree-flow")


def w1_mincost_flow(
    g: Graph, mu: Sequence, nu: Sequence, weighted: bool = False
) -> TransportResult:
    """Exact W1 as an uncapacitated min-cost flow with supplies ``mu - nu``.

    Each undirected edge becomes two opposite arcs of cost 1 (or ``w_e``).
    Successive shortest augmenting paths with Dijkstra on reduced costs route
    the excess from a super source to a super sink; the witness is the net flow
    on each oriented edge.
    """
    n = g.n
    source, sink = n, n + 1
    # residual arcs as parallel lists; arc k and k ^ 1 are mutual reverses
    head: list[int] = []
    cap: list = []
    cost: list = []
    out: list[list[int]] = [[] for _ in range(n + 2)]

    def add_arc(u: int, v: int, c, capacity) -> int:
        k = len(head)
        head.extend((v, u))
        cost.extend((c, -c))
        cap.extend((capacity, 0))
        out[u].append(k)
        out[v].append(k + 1)
        return k

    edge_arcs = []
    for u, v, w in g.edges:
        c = w if weighted else 1
        edge_arcs.append((add_arc(u, v, c, None), add_arc(v, u, c, None)))
    remaining = Fraction(0)
    for i in range(n):
        s = mu[i] - nu[i]
        if s > 0:
            add_arc(source, i, 0, s)
            remaining += s
        elif s < 0:
            add_arc(i, sink, 0, -s)

    potential: list = [0] * (n + 2)
    while remaining > 0:
        dist: list = [None] * (n + 2)
        via = [-1] * (n + 2)
        dist[source] = 0
        tie = itertools.count()
        heap = [(0, next(tie), source)]
        done = [False] * (n + 2)
        while heap:
            d, _, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for k in out[u]:
                if cap[k] is not None and cap[k] <= 0:
                    continue
                v = head[k]
                nd = d + cost[k] + potential[u] - potential[v]
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    via[v] = k
                    heapq.heappush(heap, (nd, next(tie), v))
        if dist[sink] is None:
            raise MeasureError("supplies cannot be routed; masses differ in total")
        limit = dist[sink]
        for v in range(n + 2):
            potential[v] += limit if dist[v] is None or dist[v] > limit else dist[v]

        delta = None
        v = sink
        while v != source:
            k = via[v]
            if cap[k] is not None and (delta is None or cap[k] < delta):
                delta = cap[k]
            v = head[k ^ 1]
        v = sink
        while v != source:
            k = via[v]
            if cap[k] is not None:
                cap[k] -= delta
            if cap[k ^ 1] is not None:
                cap[k ^ 1] += delta
            v = head[k ^ 1]
        remaining -= delta

    flow = []
    total = Fraction(0)
    for (fwd, bwd), (_, _, w) in zip(edge_arcs, g.edges):
        # flow on an uncapacitated arc is the residual capacity of its reverse
        net = Fraction(cap[fwd + 1]) - Fraction(cap[bwd + 1])
        flow.append(net)
        total += abs(net) * w if weighted else abs(net)
    return TransportResult(total, tuple(flow), "mcf")


def w1_lp_oracle(
    g: Graph,
    mu: Sequence,
    nu: Sequence,
    weighted: bool = False,
    max_nodes: int = LP_MAX_NODES,
) -> TransportResult:
    """Exact W1 from the coupling LP, solved by rational simplex.

    Couplings have column sums ``mu`` and row sums ``nu``.  Entries outside
    ``supp(nu) x supp(mu)`` are forced to zero by the marginals, so only the
    support block enters the LP; the returned witness is the full matrix.
    """
    n = g.n
    if n > max_nodes:
        raise TooLarge(f"LP oracle is limited to {max_nodes} nodes, got {n}")
    dist = g.weighted_distances if weighted else g.hops
    rows_idx = [i for i in range(n) if nu[i]]
    cols_idx = [j for j in range(n) if mu[j]]
    nr, nc = len(rows_idx), len(cols_idx)
    A = []
    b = []
    for a, i in enumerate(rows_idx):
        A.append([int(p // nc == a) for p in range(nr * nc)])
        b.append(nu[i])
    for c_, j in enumerate(cols_idx):
        A.append([int(p % nc == c_) for p in range(nr * nc)])
        b.append(mu[j])
    c = [dist[i][j] for i in rows_idx for j in cols_idx]
    c = [int(x) if not isinstance(x, Fraction) else x for x in c]
    value, x = solve_lp(A, b, c)
    coupling = [[Fraction(0)] * n for _ in range(n)]
    for p, val in enumerate(x):
        coupling[rows_idx[p // nc]][cols_idx[p % nc]] = val
    return TransportResult(value, tuple(tuple(r) for r in coupling), "lp-oracle")


def coupling_marginals(coupling) -> tuple[tuple, tuple]:
    """``(column sums, row sums)`` of a coupling, to compare with ``(mu, nu)``."""
    cols = tuple(sum(col, Fraction(0)) for col in zip(*coupling))
    rows = tuple(sum(row, Fraction(0)) for row in coupling)
    return cols, rows


def w1(g: Graph, mu: Sequence, nu: Sequence, weighted: bool = False) -> TransportResult:
    """Dispatch to the tree formula when possible, otherwise min-cost flow."""
    if is_tree(g):
        return w1_tree(g, mu, nu, weighted)
    return w1_mincost_flow(g, mu, nu, weighted)
