"""Two-phase tableau simplex over exact rationals.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with Bland's rule, so degenerate
problems (common for transport LPs with Dirac-like marginals) cannot cycle.
Redundant equality rows are detected after phase one and dropped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import Infeasible, Unbounded

try:  # GMP rationals are an order of magnitude faster than Fraction here
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _q(x):
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    return _Q(x)


def _pivot(rows: list[list], r: int, col: int) -> None:
    prow = rows[r]
    p = prow[col]
    if p != 1:
        prow[:] = [x / p for x in prow]
    nz = [k for k, x in enumerate(prow) if x]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[col]
        if f:
            for k in nz:
                row[k] -= f * prow[k]


def _run(rows: list[list], obj: list, basis: list[int], allowed: int) -> None:
    # obj holds reduced costs in columns [0, allowed) and -z in the last slot;
    # only columns below `allowed` may enter the basis.
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise Unbounded("objective is unbounded below")
        _pivot(rows + [obj], leave, enter)
        basis[leave] = enter


def solve_lp(
    A: Sequence[Sequence], b: Sequence, c: Sequence
) -> tuple[Fraction, list[Fraction]]:
    """Minimise ``c @ x`` subject to ``A @ x == b`` and ``x >= 0``.

    Inputs may be ints or Fractions; the optimum and an optimal basic solution
    are returned exactly as Fractions.

    Raises:
        Infeasible: no ``x >= 0`` satisfies the constraints.
        Unbounded: the objective has no finite minimum.
    """
    m = len(A)
    nvar = len(c)
    zero, one = _Q(0), _Q(1)
    rows: list[list] = []
    for i in range(m):
        row = [_q(x) for x in A[i]]
        rhs = _q(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [zero] * m
        art[i] = one
        rows.append(row + art + [rhs])
    basis = [nvar + i for i in range(m)]

    # phase one: minimise the sum of artificials
    width = nvar + m + 1
    obj = [zero] * width
    for j in range(nvar, nvar + m):
        obj[j] = one
    for row in rows:
        for k in range(width):
            obj[k] -= row[k]
    _run(rows, obj, basis, nvar + m)
    if obj[-1] != 0:
        raise Infeasible("constraints admit no non-negative solution")

    # drive zero-level artificials out of the basis; drop rows that are redundant
    i = 0
    while i < len(rows):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if rows[i][j] != 0), None)
            if col is None:
                del rows[i]
                del basis[i]
                continue
            _pivot(rows, i, col)
            basis[i] = col
        i += 1
    rows = [row[:nvar] + [row[-1]] for row in rows]

    obj = [_q(x) for x in c] + [zero]
    for i, row in enumerate(rows):
        f = obj[basis[i]]
        if f:
            for k in range(nvar + 1):
                obj[k] -= f * row[k]
    _run(rows, obj, basis, nvar)

    x = [Fraction(0)] * nvar
    for i, j in enumerate(basis):
        x[j] = _to_fraction(rows[i][-1])
    return _to_fraction(-obj[-1]), x
