"""Exact dense linear algebra over the rationals.

Rank uses fraction-free (Bareiss) elimination on integer rows; reduced row
echelon forms, kernels and solves work directly with ``Fraction``.
Matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list  # list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def _integer_rows(m: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in m:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            if v.denominator != 1:
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def bareiss_rank(m: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination; every intermediate entry is an integer."""
    a = _integer_rows(m)
    rows, cols = shape(a)
    if not rows or not cols:
        return 0
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            rc = a[r][c]
            row_r = a[r]
            row_p = a[rank]
            for j in range(c + 1, cols):
                # exact division is the Bareiss invariant
                row_r[j] = (p * row_r[j] - rc * row_p[j]) // prev
            row_r[c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


rank = bareiss_rank


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (deterministic left-to-right)."""
    a = [[Fraction(v) for v in row] for row in m]
    rows, cols = shape(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for i in range(r, rows):
            if a[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ai, ar = a[i], a[r]
                for j in range(c, cols):
                    if ar[j]:
                        ai[j] -= f * ar[j]
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(m: Sequence[Sequence], cols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : m x = 0}``.  ``cols`` is needed when ``m`` has no rows."""
    if cols is None:
        cols = shape(m)[1]
    if not m:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def transpose(m: Sequence[Sequence], cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def solve(a: Sequence[Sequence], b: Sequence, cols: int | None = None):
    """One solution of ``a x = b`` or ``None`` when the system is inconsistent."""
    rows = len(a)
    if cols is None:
        cols = shape(a)[1]
    if rows == 0:
        return [Fraction(0)] * cols
    aug = [list(row) + [Fraction(v)] for row, v in zip(a, b)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row, p in zip(r, pivots):
        x[p] = row[cols]
    return x


def left_null_certificate(a: Sequence[Sequence], b: Sequence, cols: int | None = None):
    """A row vector ``y`` with ``y a = 0`` and ``y . b != 0``, or ``None`` if ``b`` is in the image."""
    rows = len(a)
    if cols is None:
        cols = shape(a)[1]
    at = transpose(a, cols) if rows else []
    for y in nullspace(at, rows) if at else nullspace([], rows):
        if sum((yi * Fraction(bi) for yi, bi in zip(y, b)), Fraction(0)):
            return y
    return None


def column_basis(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal independent subset, chosen greedily in order."""
    if not vectors:
        return []
    _, pivots = rref(transpose(vectors))
    return pivots


def span_rank(vectors: Sequence[Sequence]) -> int:
    return bareiss_rank(vectors) if vectors else 0
