"""Exact minimal-norm least squares for small integer/rational systems.

Nonsingular integer systems go through fraction-free (Bareiss) elimination with
full pivoting, which keeps every intermediate an integer.  Rank-deficient
systems fall back to a rank factorisation ``A = C R`` over Fractions, where
``A^+ = R^T (R R^T)^{-1} (C^T C)^{-1} C^T``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def _bareiss(A: list[list[int]], b: list[int]):
    """Upper-triangularise ``[A | b]`` in place with full pivoting.

    Returns ``(M, rank, col_perm)``; rows of ``M`` beyond ``rank`` are zero in
    the coefficient block.  The matrix is held as a numpy object array so Python ints never
    overflow.
    """
    n, ncol = len(A), len(A[0])
    M = np.empty((n, ncol + 1), dtype=object)
    for i in range(n):
        M[i, :ncol] = A[i]
        M[i, ncol] = b[i]
    perm = list(range(ncol))
    prev = 1
    rank = 0
    for k in range(min(n, ncol)):
        block = M[k:, k:ncol]
        flat = np.abs(block).ravel()
        idx = np.flatnonzero(flat != 0)
        if idx.size == 0:
            break
        # smallest-magnitude pivot keeps the integers short
        r, c = divmod(int(idx[np.argmin(flat[idx])]), block.shape[1])
        r += k
        c += k
        if r != k:
            M[[k, r]] = M[[r, k]]
        if c != k:
            M[:, [k, c]] = M[:, [c, k]]
            perm[k], perm[c] = perm[c], perm[k]
        p = M[k, k]
        if k + 1 < n:
            lower = M[k + 1 :, k + 1 :]
            col = M[k + 1 :, k : k + 1]
            row = M[k : k + 1, k + 1 :]
            M[k + 1 :, k + 1 :] = (lower * p - col * row) // prev
            M[k + 1 :, k] = 0
        prev = p
        rank += 1
    return M, rank, perm


def solve_exact(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Solve a square nonsingular integer system exactly; ``None`` if singular."""
    n = len(A)
    M, rank, perm = _bareiss([list(map(int, r)) for r in A], [int(x) for x in b])
    if rank < n:
        return None
    y = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = Fraction(M[k, n])
        for j in range(k + 1, n):
            if M[k, j]:
                acc -= M[k, j] * y[j]
        y[k] = acc / M[k, k]
    x = [Fraction(0)] * n
    for k, c in enumerate(perm):
        x[c] = y[k]
    return x


def _rref(A: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in A]
    nrow, ncol = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncol):
        pr = next((i for i in range(r, nrow) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(nrow):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * bb for a, bb in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrow:
            break
    return rows[: len(pivots)], pivots


def _solve_fraction(M: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    aug = [list(row) + [x] for row, x in zip(M, v)]
    red, _ = _rref(aug)
    return [row[-1] for row in red]


def _matmul(X, Y):
    cols = list(zip(*Y))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in X]


def min_norm_lstsq(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Exact ``A^+ b`` for a rational matrix ``A``."""
    n = len(A)
    if all(isinstance(x, (int, np.integer)) for row in A for x in row) and all(
        isinstance(x, (int, np.integer)) for x in b
    ) and len(A[0]) == n:
        x = solve_exact(A, b)
        if x is not None:
            return x
    F = [[Fraction(x) for x in row] for row in A]
    R, pivots = _rref(F)
    if not pivots:
        return [Fraction(0)] * len(F[0])
    C = [[row[c] for c in pivots] for row in F]
    Ct = [list(col) for col in zip(*C)]
    bv = [Fraction(x) for x in b]
    # least squares in the column space, then the minimum-norm preimage
    ctb = [sum((a * bb for a, bb in zip(row, bv)), Fraction(0)) for row in Ct]
    y = _solve_fraction(_matmul(Ct, C), ctb)
    Rt = [list(col) for col in zip(*R)]
    z = _solve_fraction(_matmul(R, Rt), y)
    return [sum((a * zz for a, zz in zip(row, z)), Fraction(0)) for row in Rt]


def residual_inf(A: Sequence[Sequence], x: Sequence, b: Sequence) -> Fraction:
    """Exact ``max_i |(A x - b)_i|``."""
    worst = Fraction(0)
    for row, bi in zip(A, b):
        r = abs(sum((a * xi for a, xi in zip(row, x) if a), Fraction(0)) - bi)
        if r > worst:
            worst = r
    return worst
