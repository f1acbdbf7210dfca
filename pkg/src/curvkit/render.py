"""TSV, JSON and DOT renderings of curvature results.

Exact values are written as ``p/q`` (or an integer); every exact column has a
decimal companion rounded half-to-even to a fixed number of significant
digits.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .curvature import EdgeCurvature, NodeCurvature
from .graph import Graph

DEFAULT_DIGITS = 6


def exact_str(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def decimal_str(x, digits: int = DEFAULT_DIGITS) -> str:
    """Round to ``digits`` significant digits, ties to even, no exponent."""
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        if isinstance(x, Fraction):
            d = Decimal(x.numerator) / Decimal(x.denominator)
        else:
            d = +Decimal(repr(float(x)))
        if d.is_zero():
            return "0"
        return format(d, "f")


def _node(g: Graph, k: int):
    return g.node_ids[k]


def to_tsv(
    g: Graph, edges: Sequence[EdgeCurvature], nodes: NodeCurvature, digits: int = DEFAULT_DIGITS
) -> str:
    lines = ["i\tj\talpha\torc\tlly\tmethod\torc_decimal\tlly_decimal"]
    for e in edges:
        lines.append(
            "\t".join(
                [
                    str(_node(g, e.i)),
                    str(_node(g, e.j)),
                    exact_str(e.alpha),
                    exact_str(e.orc),
                    exact_str(e.lly),
                    e.method,
                    decimal_str(e.orc, digits),
                    decimal_str(e.lly, digits),
                ]
            )
        )
    lines.append("")
    lines.append("node\tks\tmethod\tks_decimal")
    for k, v in enumerate(nodes.values):
        lines.append(f"{_node(g, k)}\t{exact_str(v)}\t{nodes.method}\t{decimal_str(v, digits)}")
    lines.append("")
    lines.append(
        f"# steinerberger solvable={str(bool(nodes.solvable)).lower()} residual={exact_str(nodes.residual)}"
    )
    return "\n".join(lines) + "\n"


def to_json(
    g: Graph,
    edges: Sequence[EdgeCurvature],
    nodes: NodeCurvature,
    alphas: Sequence[Fraction],
    digits: int = DEFAULT_DIGITS,
) -> str:
    doc = {
        "n": g.n,
        "m": g.m,
        "tree": g.m == g.n - 1,
        "alphas": [exact_str(a) for a in alphas],
        "edges": [
            {
                "i": _node(g, e.i),
                "j": _node(g, e.j),
                "alpha": exact_str(e.alpha),
                "orc": exact_str(e.orc),
                "orc_decimal": decimal_str(e.orc, digits),
                "lly": exact_str(e.lly),
                "lly_decimal": decimal_str(e.lly, digits),
                "method": e.method,
            }
            for e in edges
        ],
        "nodes": [
            {"node": _node(g, k), "ks": exact_str(v), "ks_decimal": decimal_str(v, digits)}
            for k, v in enumerate(nodes.values)
        ],
        "steinerberger": {
            "method": nodes.method,
            "solvable": bool(nodes.solvable),
            "residual": exact_str(nodes.residual),
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def _quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    g: Graph,
    edges: Sequence[EdgeCurvature],
    nodes: NodeCurvature,
    alphas: Sequence[Fraction],
    digits: int = DEFAULT_DIGITS,
) -> str:
    """Undirected DOT graph; labels carry decimals, attributes carry exact values.

    Only pairs that are graph edges are drawn.  With several alphas the ORC
    attribute lists one value per alpha, separated by ``;``.
    """
    by_pair: dict[tuple[int, int], list[EdgeCurvature]] = {}
    for e in edges:
        if g.has_edge(e.i, e.j):
            by_pair.setdefault((e.i, e.j), []).append(e)
    lines = ["graph curvature {"]
    for k, v in enumerate(nodes.values):
        attrs = {"label": f"ks={decimal_str(v, digits)}", "ks": exact_str(v)}
        lines.append(f"  {_quote(_node(g, k))} [{_attrs(attrs)}];")
    for (i, j), rows in by_pair.items():
        if len(rows) == 1:
            orc_label = f"orc={decimal_str(rows[0].orc, digits)}"
        else:
            orc_label = ", ".join(f"orc({exact_str(r.alpha)})={decimal_str(r.orc, digits)}" for r in rows)
        attrs = {
            "label": f"{orc_label}, lly={decimal_str(rows[0].lly, digits)}",
            "orc": ";".join(exact_str(r.orc) for r in rows),
            "alpha": ";".join(exact_str(r.alpha) for r in rows),
            "lly": exact_str(rows[0].lly),
            "method": rows[0].method,
        }
        lines.append(f"  {_quote(_node(g, i))} -- {_quote(_node(g, j))} [{_attrs(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _attrs(attrs: dict) -> str:
    return ", ".join(f"{k}={_quote(v)}" for k, v in attrs.items())


def flow_witness_json(g: Graph, flow: Sequence[Fraction]) -> list[dict]:
    return [
        {"edge": [_node(g, u), _node(g, v)], "flow": exact_str(f)}
        for (u, v, _), f in zip(g.edges, flow)
    ]


def coupling_witness_json(g: Graph, coupling) -> list[dict]:
    return [
        {"pair": [_node(g, i), _node(g, j)], "mass": exact_str(x)}
        for i, row in enumerate(coupling)
        for j, x in enumerate(row)
        if x
    ]
