"""``curvkit`` command-line interface.

Exit codes: 0 success, 2 parse error, 3 graph invariant violation, 4 size bound
exceeded, 5 verification failure, 6 measure is not a probability vector.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .curvature import edge_curvature, steinerberger
from .errors import (
    AlphaOutOfRange,
    ConsistencyError,
    GraphError,
    MeasureError,
    ParseError,
    TooLarge,
)
from .graph import Graph, as_rational, is_tree, max_nodes, read_edge_list
from .render import (
    DEFAULT_DIGITS,
    coupling_witness_json,
    decimal_str,
    exact_str,
    flow_witness_json,
    to_dot,
    to_json,
    to_tsv,
)
from .transport import as_measure, check_alpha, w1_lp_oracle, w1_mincost_flow, w1_tree
from .verify import SUITES, VerifyConfig, run

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GRAPH = 3
EXIT_SIZE = 4
EXIT_VERIFY = 5
EXIT_MEASURE = 6


@dataclass
class RunConfig:
    """Everything one CLI invocation depends on."""

    command: str
    input_path: Optional[str] = None
    alphas: list[Fraction] = field(default_factory=lambda: [Fraction(1, 2)])
    all_pairs: bool = False
    arithmetic: Optional[str] = None
    fmt: str = "tsv"
    seed: int = 0
    max_n: int = 0
    workers: int = 1
    digits: int = DEFAULT_DIGITS


def _alpha(text: str) -> Fraction:
    try:
        return check_alpha(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _alpha_list(values: Optional[list[str]]) -> list[Fraction]:
    out = []
    for v in values or []:
        for part in v.split(","):
            if part.strip():
                out.append(_alpha(part))
    return out


def _n_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            rng = (int(lo), int(hi))
        else:
            rng = (int(text), int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from exc
    if rng[0] < 2 or rng[1] < rng[0]:
        raise argparse.ArgumentTypeError(f"need 2 <= LO <= HI, got {text!r}")
    return rng


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {k}")
    return k


def _seed(text: str) -> int:
    try:
        k = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if k < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvkit",
        description="Ollivier-Ricci, Lin-Lu-Yau and Steinerberger curvature of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-n",
            type=_positive,
            default=None,
            help="node bound for dense work (default: $CURVKIT_MAX_N or 10000)",
        )
        p.add_argument("--workers", type=_positive, default=1, help="worker threads")

    p = sub.add_parser("compute", help="curvature of every edge and node")
    p.add_argument("graph", help="edge-list file ('u v [w]' per line)")
    p.add_argument(
        "--alpha",
        action="append",
        help="idleness in [0, 1) as p/q or decimal; repeat or comma-separate (default 1/2)",
    )
    p.add_argument("--all-pairs", action="store_true", help="every node pair, not just edges")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="arithmetic", action="store_const", const="exact")
    mode.add_argument("--float", dest="arithmetic", action="store_const", const="float")
    p.add_argument("--format", choices=("tsv", "json", "dot"), default="tsv")
    p.add_argument("--precision", type=_positive, default=DEFAULT_DIGITS, help="significant digits")
    p.add_argument("--seed", type=_seed, default=0, help="accepted for uniformity; compute is deterministic")
    common(p)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("graph", nargs="?", help="check this graph instead of random instances")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n", type=_n_range, default=None, help="node-count range LO..HI")
    p.add_argument("--count", type=_positive, default=None, help="instances per suite")
    p.add_argument("--alpha", action="append", help="alpha values (repeat or comma-separate)")
    p.add_argument("--seed", type=_seed, default=0)
    common(p)

    p = sub.add_parser("oracle", help="W1 between two measures by several methods")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--mu", required=True, help="JSON array of rational strings")
    p.add_argument("--nu", required=True, help="JSON array of rational strings")
    p.add_argument("--method", choices=("tree", "mcf", "lp", "all"), default="all")
    p.add_argument("--emit-witness", action="store_true", help="append the optimal flow or coupling as JSON")
    p.add_argument("--weighted", action="store_true", help="use least-weight distances instead of hops")
    common(p)
    return parser


@contextlib.contextmanager
def _node_bound(limit: Optional[int]):
    if limit is None:
        yield max_nodes()
        return
    old = os.environ.get("CURVKIT_MAX_N")
    os.environ["CURVKIT_MAX_N"] = str(limit)
    try:
        yield limit
    finally:
        if old is None:
            del os.environ["CURVKIT_MAX_N"]
        else:
            os.environ["CURVKIT_MAX_N"] = old


def _load(path: str, limit: int) -> Graph:
    try:
        g = read_edge_list(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text") from exc
    if g.n > limit:
        raise TooLarge(f"graph has {g.n} nodes, bound is {limit}")
    return g


def _pmap(fn, items, workers: int) -> list:
    items = list(items)
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def cmd_compute(cfg: RunConfig, out) -> int:
    g = _load(cfg.input_path, cfg.max_n)
    if cfg.all_pairs:
        pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
    else:
        pairs = [(u, v) for u, v, _ in g.edges]
    jobs = [(i, j, a) for i, j in pairs for a in cfg.alphas]
    # warm the shared caches before threads start
    g.degrees, g.weighted_degrees, g.hops
    if is_tree(g):
        g.rooted
    rows = _pmap(lambda job: edge_curvature(g, *job), jobs, cfg.workers)
    nodes = steinerberger(g, cfg.arithmetic)
    if cfg.fmt == "json":
        out.write(to_json(g, rows, nodes, cfg.alphas, cfg.digits))
    elif cfg.fmt == "dot":
        out.write(to_dot(g, rows, nodes, cfg.alphas, cfg.digits))
    else:
        out.write(to_tsv(g, rows, nodes, cfg.digits))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str, n_range, count, out) -> int:
    graph = _load(cfg.input_path, cfg.max_n) if cfg.input_path else None
    vcfg = VerifyConfig(
        suite=suite,
        n_range=n_range,
        count=count,
        alphas=cfg.alphas or None,
        seed=cfg.seed,
        workers=cfg.workers,
        graph=graph,
    )
    result = run(vcfg)
    for rep in result.reports:
        out.write(rep.line() + "\n")
    for rep in result.flagged:
        out.write(f"flagged\t{rep.theorem}\t{rep.instance}\n")
    out.write(result.summary() + "\n")
    return EXIT_VERIFY if result.failed else EXIT_OK


def _read_measure(path: str, n: int):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(raw, list):
        raise MeasureError(f"{path}: expected a JSON array")
    if any(isinstance(x, bool) or not isinstance(x, (str, int, float)) for x in raw):
        raise MeasureError(f"{path}: entries must be numbers or rational strings")
    return as_measure(raw, n)


def cmd_oracle(cfg: RunConfig, method: str, mu_path: str, nu_path: str, weighted: bool,
               emit_witness: bool, out) -> int:
    g = _load(cfg.input_path, cfg.max_n)
    mu = _read_measure(mu_path, g.n)
    nu = _read_measure(nu_path, g.n)
    methods = ("tree", "mcf", "lp") if method == "all" else (method,)
    if method == "all" and not is_tree(g):
        methods = ("mcf", "lp")
    header = "method\tw1\tw1_decimal" + ("\twitness" if emit_witness else "")
    out.write(header + "\n")
    for name in methods:
        if name == "tree":
            res = w1_tree(g, mu, nu, weighted)
            witness = flow_witness_json(g, res.witness)
        elif name == "mcf":
            res = w1_mincost_flow(g, mu, nu, weighted)
            witness = flow_witness_json(g, res.witness)
        else:
            res = w1_lp_oracle(g, mu, nu, weighted)
            witness = coupling_witness_json(g, res.witness)
        line = f"{res.method}\t{exact_str(res.cost)}\t{decimal_str(res.cost)}"
        if emit_witness:
            line += "\t" + json.dumps(witness, separators=(",", ":"))
        out.write(line + "\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        alphas = _alpha_list(args.alpha) if hasattr(args, "alpha") else []
    except argparse.ArgumentTypeError as exc:
        print(f"curvkit: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        with _node_bound(args.max_n) as limit:
            cfg = RunConfig(
                command=args.command,
                input_path=args.graph,
                alphas=alphas,
                seed=getattr(args, "seed", 0),
                max_n=limit,
                workers=args.workers,
            )
            if args.command == "compute":
                cfg.alphas = alphas or [Fraction(1, 2)]
                cfg.all_pairs = args.all_pairs
                cfg.arithmetic = args.arithmetic
                cfg.fmt = args.format
                cfg.digits = args.precision
                return cmd_compute(cfg, out)
            if args.command == "verify":
                return cmd_verify(cfg, args.suite, args.n, args.count, out)
            return cmd_oracle(cfg, args.method, args.mu, args.nu, args.weighted, args.emit_witness, out)
    except ParseError as exc:
        code, msg = EXIT_PARSE, exc
    except AlphaOutOfRange as exc:
        code, msg = EXIT_PARSE, exc
    except TooLarge as exc:
        code, msg = EXIT_SIZE, exc
    except MeasureError as exc:
        code, msg = EXIT_MEASURE, exc
    except (GraphError, ConsistencyError) as exc:
        code, msg = EXIT_GRAPH, exc
    print(f"curvkit: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
