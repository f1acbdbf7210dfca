"""Exact machine checks of the identities and inequalities relating the curvatures.

Each checker evaluates both sides in rational arithmetic and returns a
:class:`TheoremReport`; nothing here uses a tolerance except the float mode of
the Steinerberger solve on large non-tree graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .curvature import (
    NodeCurvature,
    lly_tree_closed,
    orc_definitional,
    steinerberger_solve,
    steinerberger_tree_closed,
)
from .errors import NoSuchEdge, NotATree, NotCombinatorial
from .graph import Graph, diameter, is_tree, volume
from .transport import check_alpha


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one check on one instance.

    ``passed`` is exact.  ``applicable`` is false when the instance does not
    meet the hypotheses (the check is then skipped, not failed).  ``flagged``
    marks a strict inequality that held only with equality.
    """

    theorem: str
    instance: str
    predicate: str
    passed: bool
    witnesses: tuple = ()
    applicable: bool = True
    flagged: bool = False

    @property
    def ok(self) -> bool:
        return self.passed or not self.applicable

    @property
    def status(self) -> str:
        if not self.applicable:
            return "N/A"
        if not self.passed:
            return "FAIL"
        return "FLAG" if self.flagged else "PASS"

    def line(self) -> str:
        values = " ".join(f"{k}={v}" for k, v in self.witnesses)
        return f"{self.status}\t{self.theorem}\t{self.instance}\t{self.predicate}\t{values}".rstrip()


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise NotATree("check is stated for trees")


def _require_combinatorial(g: Graph) -> None:
    _require_tree(g)
    if not g.is_unit_weight:
        raise NotCombinatorial("check is stated for unit-weight trees")


def distance_identity_check(
    g: Graph, i: Optional[int] = None, weighted: bool = False, instance: str = ""
) -> TheoremReport:
    """``2 sum_j d(i,j) == vol/2 + sum_j d(i,j) deg_c(j)`` on a tree.

    With ``i=None`` every node is checked at once (vectorised, exact int64).
    The default uses hop distances and the combinatorial volume ``2(n-1)``;
    ``weighted=True`` uses least-weight distances and the weighted volume.
    """
    _require_tree(g)
    deg = np.array(g.degrees, dtype=np.int64)
    if weighted:
        D = g.weighted_distances
        half_vol = volume(g) / 2
        nodes = range(g.n) if i is None else [i]
        lhs = [2 * sum(D[k], Fraction(0)) for k in nodes]
        rhs = [half_vol + sum((d * int(c) for d, c in zip(D[k], deg)), Fraction(0)) for k in nodes]
    else:
        D = g.hops if i is None else g.hops[i : i + 1]
        lhs = (2 * D.sum(axis=1)).tolist()
        rhs = ((g.n - 1) + D @ deg).tolist()
    bad = [k for k, (a, b) in enumerate(zip(lhs, rhs)) if a != b]
    k = bad[0] if bad else 0
    node = k if i is None else i
    witnesses = (("node", node), ("lhs", lhs[k]), ("rhs", rhs[k]), ("nodes_checked", len(lhs)))
    return TheoremReport(
        "distance-identity",
        instance or f"n={g.n}",
        "2*sum_j d(i,j) == vol/2 + sum_j d(i,j)*deg(j)",
        not bad,
        witnesses,
    )


def comparison_check(
    g: Graph,
    i: int,
    j: int,
    alpha,
    ks: Optional[NodeCurvature] = None,
    instance: str = "",
) -> list[TheoremReport]:
    """Compare ORC, LLY and Steinerberger curvature on a combinatorial tree edge.

    Returns three reports: the three-way equality (applicable when
    ``1/deg i + 1/deg j <= 1/(1-alpha)``), the non-leaf chain
    ``0 >= orc >= lly > max_x 4/deg x * (ks_x - 1/2)`` and the leaf chain
    ``0 <= orc <= lly <= 8/3 * ks_leaf`` (both need ``n >= 3``; the leaf chain
    also needs ``1 + 1/deg(other) <= 1/(1-alpha)``).

    ORC comes from optimal transport, LLY and ``ks`` from the closed forms, so
    the equality is a genuine cross-check.  Pass ``ks`` to reuse a
    precomputed closed-form vector.
    """
    _require_combinatorial(g)
    if not g.has_edge(i, j):
        raise NoSuchEdge(f"{{{i}, {j}}} is not an edge")
    a = check_alpha(alpha)
    n = g.n
    di, dj = g.degrees[i], g.degrees[j]
    orc = orc_definitional(g, i, j, a).orc
    lly = lly_tree_closed(g, i, j).lly
    if ks is None:
        ks = steinerberger_tree_closed(g)
    ksi, ksj = ks.values[i], ks.values[j]
    tag = instance or f"n={n}"
    tag = f"{tag} edge=({i},{j}) alpha={a}"
    reports = []

    via_lly = (1 - a) * lly
    via_ks = (1 - a) * Fraction(n - 1, n) * (ksi / di + ksj / dj)
    eq_applicable = Fraction(1, di) + Fraction(1, dj) <= 1 / (1 - a)
    reports.append(
        TheoremReport(
            "comparison-equality",
            tag,
            "orc == (1-a)*lly == (1-a)*(n-1)/n*(ks_i/deg_i + ks_j/deg_j)",
            orc == via_lly == via_ks,
            (("orc", orc), ("(1-a)lly", via_lly), ("(1-a)ks", via_ks)),
            applicable=eq_applicable,
        )
    )

    nonleaf = n >= 3 and di >= 2 and dj >= 2
    bound = max(Fraction(4, d) * (k - Fraction(1, 2)) for d, k in ((di, ksi), (dj, ksj)))
    reports.append(
        TheoremReport(
            "nonleaf-chain",
            tag,
            "0 >= orc >= lly > max_x 4/deg_x*(ks_x - 1/2)",
            0 >= orc >= lly >= bound,
            (("orc", orc), ("lly", lly), ("bound", bound)),
            applicable=nonleaf,
            flagged=nonleaf and lly == bound,
        )
    )

    if di == 1 and n >= 3:
        leaf, other = i, j
    elif dj == 1 and n >= 3:
        leaf, other = j, i
    else:
        leaf = other = None
    leaf_applicable = leaf is not None and 1 + Fraction(1, g.degrees[other]) <= 1 / (1 - a)
    cap = Fraction(8, 3) * ks.values[leaf] if leaf is not None else Fraction(0)
    reports.append(
        TheoremReport(
            "leaf-chain",
            tag,
            "0 <= orc <= lly <= 8/3*ks_leaf",
            leaf is not None and 0 <= orc <= lly <= cap,
            (("orc", orc), ("lly", lly), ("8/3*ks_leaf", cap)),
            applicable=leaf_applicable,
        )
    )
    return reports


def degree_diameter_check(g: Graph, instance: str = "") -> TheoremReport:
    """``D >= (n-1) / sum_i |2 - deg_c i|`` on a tree."""
    _require_tree(g)
    D = diameter(g)
    spread = sum(abs(2 - d) for d in g.degrees)
    bound = Fraction(g.n - 1, spread)
    return TheoremReport(
        "degree-diameter",
        instance or f"n={g.n}",
        "D >= (n-1)/sum|2-deg|",
        D >= bound,
        (("D", D), ("bound", bound), ("sum|2-deg|", spread)),
    )


def reverse_bonnet_myers_check(
    g: Graph, arithmetic: str | None = None, instance: str = ""
) -> TheoremReport:
    """``||ks||_1 >= n / D`` whenever ``D ks = n 1`` has a solution.

    Trees use the closed form (its residual is verified to be exactly zero);
    other graphs use the pseudoinverse solve and are reported not applicable
    when the system is inconsistent.
    """
    ks = steinerberger_tree_closed(g) if is_tree(g) else steinerberger_solve(g, arithmetic)
    D = diameter(g)
    if isinstance(ks.residual, Fraction):
        norm = sum((abs(v) for v in ks.values), Fraction(0))
        bound = Fraction(g.n, D)
    else:
        norm = float(sum(abs(v) for v in ks.values))
        bound = g.n / D
    return TheoremReport(
        "reverse-bonnet-myers",
        instance or f"n={g.n}",
        "||ks||_1 >= n/D",
        bool(ks.solvable) and norm >= bound,
        (("norm", norm), ("n/D", bound), ("residual", ks.residual)),
        applicable=bool(ks.solvable),
    )
