"""Seeded verification suites shared by ``curvkit verify`` and the test-suite.

Every instance draws from its own generator seeded by ``(seed, suite, index)``,
so the report stream is identical for any number of worker threads.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .checks import (
    TheoremReport,
    comparison_check,
    degree_diameter_check,
    distance_identity_check,
    reverse_bonnet_myers_check,
)
from .curvature import steinerberger_tree_closed
from .generators import (
    path_graph,
    random_connected_graph,
    random_measure,
    random_tree,
    star_graph,
)
from .graph import Graph, apply_incidence, is_tree
from .transport import (
    coupling_marginals,
    lazy_walk_measure,
    w1_lp_oracle,
    w1_mincost_flow,
    w1_tree,
)

SUITES = ("identities", "comparisons", "oracles", "bounds")

DEFAULTS = {
    "identities": dict(n_range=(2, 200), count=100, alphas=()),
    "comparisons": dict(
        n_range=(2, 100), count=200, alphas=tuple(Fraction(k, 4) for k in range(4))
    ),
    "oracles": dict(
        n_range=(2, 12),
        count=100,
        alphas=(Fraction(0), Fraction(1, 4), Fraction(12, 25), Fraction(1, 2), Fraction(3, 4)),
    ),
    "bounds": dict(n_range=(2, 100), count=100, alphas=()),
}

NON_TREE_MAX_N = 8


@dataclass
class VerifyConfig:
    suite: str = "all"
    n_range: Optional[tuple[int, int]] = None
    count: Optional[int] = None
    alphas: Optional[Sequence[Fraction]] = None
    seed: int = 0
    workers: int = 1
    graph: Optional[Graph] = None


@dataclass
class SuiteResult:
    reports: list[TheoremReport] = field(default_factory=list)

    @property
    def failed(self) -> list[TheoremReport]:
        return [r for r in self.reports if not r.ok]

    @property
    def flagged(self) -> list[TheoremReport]:
        return [r for r in self.reports if r.applicable and r.flagged]

    def summary(self) -> str:
        counts = {s: 0 for s in ("PASS", "FAIL", "FLAG", "N/A")}
        for r in self.reports:
            counts[r.status] += 1
        return (
            f"summary\tpass={counts['PASS']}\tfail={counts['FAIL']}"
            f"\tflag={counts['FLAG']}\tn/a={counts['N/A']}"
        )


def instance_rng(seed: int, suite: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{index}")


def tree_corpus(
    count: int, n_range: tuple[int, int], seed: int, weights: str = "unit"
) -> list[Graph]:
    """Deterministic list of random trees.

    ``weights`` is ``"unit"``, ``"rational"`` or ``"mixed"`` (alternating).
    """
    out = []
    for k in range(count):
        rng = instance_rng(seed, "corpus", k)
        n = rng.randint(*n_range)
        weighted = weights == "rational" or (weights == "mixed" and k % 2 == 1)
        out.append(random_tree(n, rng, weighted=weighted))
    return out


def aggregate(name: str, instance: str, predicate: str, reports: list[TheoremReport]) -> TheoremReport:
    """Fold per-edge reports into one line; keeps the first failure as witness."""
    applicable = [r for r in reports if r.applicable]
    failed = [r for r in applicable if not r.passed]
    flagged = [r for r in applicable if r.flagged]
    witness = failed[0] if failed else (flagged[0] if flagged else None)
    witnesses: tuple = (("checked", len(applicable)), ("skipped", len(reports) - len(applicable)))
    if witness is not None:
        witnesses += (("at", witness.instance.split(" ", 1)[-1].replace(" ", ",")),) + witness.witnesses
    return TheoremReport(
        name,
        instance,
        predicate,
        not failed,
        witnesses,
        applicable=bool(applicable),
        flagged=bool(flagged),
    )


def _identities(g: Graph, tag: str, alphas) -> list[TheoremReport]:
    return [distance_identity_check(g, instance=tag)]


def _comparisons(g: Graph, tag: str, alphas) -> list[TheoremReport]:
    ks = steinerberger_tree_closed(g)
    out = []
    for a in alphas:
        per_edge: dict[str, list[TheoremReport]] = {}
        predicates = {}
        for u, v, _ in g.edges:
            for rep in comparison_check(g, u, v, a, ks=ks, instance=tag):
                per_edge.setdefault(rep.theorem, []).append(rep)
                predicates[rep.theorem] = rep.predicate
        for name, reps in per_edge.items():
            out.append(aggregate(name, f"{tag} alpha={a}", predicates[name], reps))
    return out


def _transport_pairs(g: Graph, alphas, rng: random.Random):
    pairs = []
    for u, v, _ in g.edges:
        for a in alphas:
            pairs.append((f"lazy({u},{v},{a})", lazy_walk_measure(g, u, a), lazy_walk_measure(g, v, a)))
    for k in range(2):
        pairs.append((f"random{k}", random_measure(g.n, rng), random_measure(g.n, rng)))
    return pairs


def oracle_agreement(g: Graph, pairs, tag: str) -> TheoremReport:
    """Tree flow, min-cost flow and the coupling LP agree and their witnesses are feasible."""
    tree = is_tree(g)
    bad = None
    for label, mu, nu in pairs:
        target = [a - b for a, b in zip(mu, nu)]
        mcf = w1_mincost_flow(g, mu, nu)
        lp = w1_lp_oracle(g, mu, nu)
        costs = [mcf.cost, lp.cost]
        feasible = apply_incidence(g, mcf.witness) == target
        feasible &= coupling_marginals(lp.witness) == (tuple(mu), tuple(nu))
        if tree:
            tf = w1_tree(g, mu, nu)
            costs.insert(0, tf.cost)
            feasible &= apply_incidence(g, tf.witness) == target
        if len(set(costs)) != 1 or not feasible:
            bad = (label, costs, feasible)
            break
    predicate = "w1_tree == w1_mcf == w1_lp" if tree else "w1_mcf == w1_lp"
    witnesses: tuple = (("pairs", len(pairs)),)
    if bad is not None:
        witnesses += (("at", bad[0]), ("costs", "/".join(map(str, bad[1]))), ("feasible", bad[2]))
    return TheoremReport("oracle-agreement", tag, predicate, bad is None, witnesses)


def _bounds(g: Graph, tag: str, alphas) -> list[TheoremReport]:
    return [degree_diameter_check(g, instance=tag), reverse_bonnet_myers_check(g, instance=tag)]


def extremal_reports(n_range: tuple[int, int]) -> list[TheoremReport]:
    """Degree-diameter bound on paths and stars, where it reads
    ``n-1 >= (n-1)/2`` and ``2 >= (n-1)/(2(n-2))``."""
    out = []
    for n in range(max(3, n_range[0]), n_range[1] + 1):
        out.append(degree_diameter_check(path_graph(n), instance=f"path n={n}"))
        out.append(degree_diameter_check(star_graph(n), instance=f"star n={n}"))
    return out


def _instance(suite: str, k: int, cfg: VerifyConfig, n_range, alphas) -> list[TheoremReport]:
    rng = instance_rng(cfg.seed, suite, k)
    n = rng.randint(*n_range)
    tag = f"#{k} n={n}"
    if suite == "identities":
        return _identities(random_tree(n, rng), tag, alphas)
    if suite == "comparisons":
        return _comparisons(random_tree(n, rng), tag, alphas)
    if suite == "bounds":
        return _bounds(random_tree(n, rng), tag, alphas)
    if suite == "oracles":
        g = random_tree(n, rng, weighted=rng.random() < 0.5)
        out = [oracle_agreement(g, _transport_pairs(g, alphas, rng), f"{tag} tree")]
        m = max(3, min(n, NON_TREE_MAX_N))
        extra = rng.randint(1, max(1, m * (m - 1) // 2 - (m - 1)))
        h = random_connected_graph(m, extra, rng, weighted=rng.random() < 0.5)
        out.append(oracle_agreement(h, _transport_pairs(h, alphas, rng), f"#{k} n={m} graph m={h.m}"))
        return out
    raise ValueError(f"unknown suite {suite!r}")


def _on_graph(suite: str, g: Graph, alphas) -> list[TheoremReport]:
    tag = f"input n={g.n}"
    if suite == "identities":
        return _identities(g, tag, alphas)
    if suite == "comparisons":
        return _comparisons(g, tag, alphas)
    if suite == "bounds":
        return _bounds(g, tag, alphas)
    if suite == "oracles":
        return [oracle_agreement(g, _transport_pairs(g, alphas, instance_rng(0, "input", 0)), tag)]
    raise ValueError(f"unknown suite {suite!r}")


def _map(fn: Callable, items: Iterable, workers: int) -> list:
    items = list(items)
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def run(cfg: VerifyConfig) -> SuiteResult:
    """Run one suite (or ``"all"``) and return reports in canonical order."""
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    for s in suites:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
    result = SuiteResult()
    for suite in suites:
        d = DEFAULTS[suite]
        n_range = cfg.n_range or d["n_range"]
        if n_range[0] < 2 or n_range[1] < n_range[0]:
            raise ValueError(f"invalid n range {n_range}")
        alphas = tuple(cfg.alphas) if cfg.alphas else d["alphas"]
        if cfg.graph is not None:
            result.reports.extend(_on_graph(suite, cfg.graph, alphas))
            continue
        if suite == "bounds":
            result.reports.extend(extremal_reports(n_range))
        count = cfg.count if cfg.count is not None else d["count"]
        chunks = _map(
            lambda k, suite=suite: _instance(suite, k, cfg, n_range, alphas),
            range(count),
            cfg.workers,
        )
        for chunk in chunks:
            result.reports.extend(chunk)
    return result
