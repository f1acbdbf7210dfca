"""Ollivier-Ricci, Lin-Lu-Yau and Steinerberger curvature.

Every quantity has a definitional route that works on any connected graph
(optimal transport, or a pseudoinverse solve of the distance system) and, on
trees, an exact closed form.  The two routes are independent and are checked
against each other by the test-suite and by ``curvkit verify``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import ConsistencyError, NotATree, SameNode
from .graph import Graph, as_rational, geodesic, is_tree, volume
from .linalg import min_norm_lstsq, residual_inf
from .transport import check_alpha, lazy_walk_measure, w1

CLOSED_FORM = "closed-form"
DEFINITIONAL = "definitional"

DEFAULT_LLY_GRID = tuple(Fraction(2**k - 1, 2**k) for k in range(1, 6))
FLOAT_TOLERANCE = 1e-9
EXACT_SOLVE_MAX_N = 500


@dataclass(frozen=True)
class EdgeCurvature:
    i: int
    j: int
    alpha: Optional[Fraction]
    orc: Optional[Fraction]
    lly: Optional[Fraction]
    method: str


@dataclass(frozen=True)
class NodeCurvature:
    """Per-node Steinerberger curvature with the residual of ``D k = n 1``.

    ``values`` are Fractions in exact mode and floats in float mode.
    """

    values: tuple
    residual: object
    solvable: bool
    method: str


def _pair(g: Graph, i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise SameNode("curvature needs two distinct nodes")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise IndexError(f"node out of range: {i}, {j}")
    return i, j


def _dist(g: Graph, i: int, j: int, weighted: bool):
    return g.weighted_distances[i][j] if weighted else int(g.hops[i, j])


def orc_definitional(g: Graph, i: int, j: int, alpha, weighted: bool = False) -> EdgeCurvature:
    """``1 - W1(m_i, m_j) / d(i, j)`` with alpha-lazy random walk measures.

    Uses the tree flow on trees and min-cost flow otherwise.
    """
    _pair(g, i, j)
    a = check_alpha(alpha)
    mu = lazy_walk_measure(g, i, a)
    nu = lazy_walk_measure(g, j, a)
    cost = w1(g, mu, nu, weighted).cost
    return EdgeCurvature(i, j, a, 1 - cost / _dist(g, i, j, weighted), None, DEFINITIONAL)


def _signed_spread(g: Graph, i: int, toward: int) -> Fraction:
    # sum over neighbours x of w_ix * sigma_ix / deg_w(i), where sigma is -1
    # only on the geodesic edge leaving i
    deg = g.weighted_degrees[i]
    return (deg - 2 * g.weight(i, toward)) / deg


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotATree("closed forms hold on trees only")


def orc_tree_closed(g: Graph, i: int, j: int, alpha) -> EdgeCurvature:
    """Ollivier-Ricci curvature on a weighted tree from its closed form.

    Adjacent pairs use the absolute-value expression, which is exact for every
    alpha in [0, 1); non-adjacent pairs use the geodesic sign form.
    """
    _require_tree(g)
    _pair(g, i, j)
    a = check_alpha(alpha)
    di, dj = g.weighted_degrees[i], g.weighted_degrees[j]
    if g.has_edge(i, j):
        wij = g.weight(i, j)
        off_i = (di - wij) / di
        off_j = (dj - wij) / dj
        kappa = 1 - (1 - a) * (off_i + off_j) - abs(1 - (1 - a) * wij * (1 / di + 1 / dj))
    else:
        path = geodesic(g, i, j)
        d = len(path) - 1
        s = _signed_spread(g, i, path[1]) + _signed_spread(g, j, path[-2])
        kappa = -(1 - a) * s / d
    return EdgeCurvature(i, j, a, kappa, None, CLOSED_FORM)


def lly_tree_closed(g: Graph, i: int, j: int) -> EdgeCurvature:
    """Lin-Lu-Yau curvature on a weighted tree.

    On unit weights this is ``2/d(i,j) * (1/deg i + 1/deg j - 1)``.
    """
    _require_tree(g)
    _pair(g, i, j)
    path = geodesic(g, i, j)
    d = len(path) - 1
    s = _signed_spread(g, i, path[1]) + _signed_spread(g, j, path[-2])
    return EdgeCurvature(i, j, None, None, -s / d, CLOSED_FORM)


def lly_limit_estimate(
    g: Graph, i: int, j: int, alphas: Sequence = DEFAULT_LLY_GRID, weighted: bool = False
) -> tuple[Fraction, list[Fraction]]:
    """Evaluate ``orc(alpha) / (1 - alpha)`` on a grid approaching 1.

    The ratio is non-decreasing in alpha on every graph, so a decrease means a
    solver is wrong and raises :class:`ConsistencyError`.  The last value is
    returned as the estimate; on trees it is exact for any grid above 1/2.
    """
    _pair(g, i, j)
    grid = [as_rational(a) for a in alphas]
    if not grid:
        raise ValueError("alpha grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("alpha grid must be strictly increasing")
    seq = []
    for a in grid:
        seq.append(orc_definitional(g, i, j, a, weighted).orc / (1 - a))
    for a, prev, cur in zip(grid[1:], seq, seq[1:]):
        if cur < prev:
            raise ConsistencyError(
                f"orc/(1-alpha) decreased at alpha={a} on ({i}, {j}): {prev} -> {cur}"
            )
    return seq[-1], seq


def _steinerberger_residual(g: Graph, values: Sequence, weighted: bool) -> Fraction:
    n = g.n
    if weighted:
        return residual_inf(g.weighted_distances, values, [n] * n)
    denom = math.lcm(*(v.denominator for v in values))
    nums = np.array([int(v * denom) for v in values], dtype=object)
    prod = g.hops.astype(object) @ nums
    return Fraction(int(max(abs(x - n * denom) for x in prod)), denom)


def steinerberger_tree_closed(g: Graph, weighted: bool = False) -> NodeCurvature:
    """Steinerberger curvature of a tree, ``n/(n-1) * (2 - deg_c i)``.

    With ``weighted=True`` the distance matrix is the least-total-weight one and
    the answer is the combinatorial one rescaled to ``2n(2 - deg_c i)/vol``.
    The residual is computed exactly against the matching distance matrix.
    """
    _require_tree(g)
    n = g.n
    if n < 2:
        raise ValueError("curvature needs at least two nodes")
    scale = Fraction(2 * n) / (volume(g) if weighted else 2 * (n - 1))
    values = tuple(scale * (2 - d) for d in g.degrees)
    res = _steinerberger_residual(g, values, weighted)
    return NodeCurvature(values, res, res == 0, CLOSED_FORM)


def steinerberger_solve(
    g: Graph, arithmetic: str | None = None, weighted: bool = False
) -> NodeCurvature:
    """Minimum-norm least-squares solution of ``D k = n 1``.

    Args:
        arithmetic: ``"exact"`` (rational pseudoinverse), ``"float"`` (SVD
            least squares, solvable when the max residual is at most
            ``1e-9 * n``) or ``None`` to pick exact up to 500 nodes.
        weighted: use least-total-weight distances instead of hop counts.
    """
    n = g.n
    if arithmetic is None:
        arithmetic = "exact" if n <= EXACT_SOLVE_MAX_N else "float"
    if arithmetic == "float":
        D = np.array(
            [[float(x) for x in row] for row in g.weighted_distances] if weighted else g.hops,
            dtype=float,
        )
        rhs = np.full(n, float(n))
        x, *_ = np.linalg.lstsq(D, rhs, rcond=None)
        res = float(np.max(np.abs(D @ x - rhs)))
        return NodeCurvature(tuple(float(v) for v in x), res, res <= FLOAT_TOLERANCE * n, DEFINITIONAL)
    if arithmetic != "exact":
        raise ValueError(f"arithmetic must be 'exact' or 'float', got {arithmetic!r}")
    if weighted:
        A = [list(row) for row in g.weighted_distances]
    else:
        A = [[int(x) for x in row] for row in g.hops]
    values = tuple(min_norm_lstsq(A, [n] * n))
    res = _steinerberger_residual(g, values, weighted)
    return NodeCurvature(values, res, res == 0, DEFINITIONAL)


def steinerberger(g: Graph, arithmetic: str | None = None) -> NodeCurvature:
    """Closed form on trees, pseudoinverse solve otherwise."""
    if is_tree(g):
        return steinerberger_tree_closed(g)
    return steinerberger_solve(g, arithmetic)


def edge_curvature(g: Graph, i: int, j: int, alpha) -> EdgeCurvature:
    """ORC at ``alpha`` plus LLY for one pair, by the cheapest exact route.

    Trees use the closed forms.  Other graphs use min-cost flow for ORC and the
    grid estimate for LLY (the true limit has no closed form there).
    """
    if is_tree(g):
        orc = orc_tree_closed(g, i, j, alpha)
        return EdgeCurvature(i, j, orc.alpha, orc.orc, lly_tree_closed(g, i, j).lly, CLOSED_FORM)
    orc = orc_definitional(g, i, j, alpha)
    est, _ = lly_limit_estimate(g, i, j)
    return EdgeCurvature(i, j, orc.alpha, orc.orc, est, DEFINITIONAL)
