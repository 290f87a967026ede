"""Exact dense linear algebra over field scalars (rational or cyclotomic).

Fraction-free elimination in the Bareiss scheme with first-nonzero
pivoting: every intermediate entry is a quotient of minors, and each
division is exact in the ring.  No pivot-size heuristics, so results are
bit-for-bit deterministic for a given matrix.
"""

from __future__ import annotations

from .scalars import LAURENT, Scalar


class LaurentScalars(TypeError):
    """Matrix entries must live in a field; Laurent scalars are not one."""


def _check_field(rows):
    for row in rows:
        for x in row:
            if not isinstance(x, Scalar):
                raise TypeError(f"matrix entries must be Scalars, got {type(x).__name__}")
            if x.tag == LAURENT:
                raise LaurentScalars("matrix entries must be rational or cyclotomic")


def rank_kernel(rows: list[list[Scalar]]) -> tuple[int, list[list[Scalar]]]:
    """Rank and a kernel basis of the matrix given as a list of rows.

    Kernel vectors have a 1 in their free column and are returned in
    column order; rank + len(kernel) == number of columns.
    """
    _check_field(rows)
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    a = [list(r) for r in rows]
    one = Scalar.one()

    pivots: list[tuple[int, int]] = []  # (row, col) in elimination order
    prev = one
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            if all(a[i][j].is_zero() for j in range(c, n)):
                continue
            f = a[i][c]
            for j in range(c, n):
                a[i][j] = (piv * a[i][j] - f * a[r][j]) / prev
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == m:
            break

    rank = len(pivots)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    kernel = []
    zero = Scalar.zero()
    for f in free_cols:
        x = [zero] * n
        x[f] = one
        for r, c in reversed(pivots):
            s = zero
            for j in range(c + 1, n):
                if not x[j].is_zero():
                    s = s + a[r][j] * x[j]
            x[c] = -s / a[r][c]
        kernel.append(x)
    return rank, kernel


def matrix_apply(rows: list[list[Scalar]], vec: list[Scalar]) -> list[Scalar]:
    zero = Scalar.zero()
    out = []
    for row in rows:
        s = zero
        for x, v in zip(row, vec):
            if not x.is_zero() and not v.is_zero():
                s = s + x * v
        out.append(s)
    return out
