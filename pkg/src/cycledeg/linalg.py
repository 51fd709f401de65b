"""Exact linear algebra over the rationals.

Matrices are plain lists of rows. Entries may be ints or Fractions; nothing
is ever converted to floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence]


def clear_denominators(m: Matrix) -> list[list[int]]:
    # Scaling a row by a nonzero constant does not change the rank.
    rows = []
    for row in m:
        if all(type(x) is int for x in row):
            rows.append(list(row))
            continue
        row = [x if isinstance(x, Fraction) else Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        rows.append([x.numerator * (scale // x.denominator) for x in row])
    return rows


def rank_exact(m: Matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators, then eliminated with the
    one-step Bareiss update, whose divisions are exact because every
    intermediate entry is a minor of the integer matrix.
    """
    a = clear_denominators(m)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, n_rows):
            f = a[i][col]
            row_i, row_k = a[i], a[rank]
            for j in range(col, n_cols):
                row_i[j] = (p * row_i[j] - f * row_k[j]) // prev
        prev = p
        rank += 1
    return rank


def determinant(m: Matrix) -> Fraction:
    """Determinant by Gaussian elimination over Fractions."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f:
                for j in range(col, n):
                    a[i][j] -= f * a[col][j]
    return det


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the list of pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return a, []
    n_rows, n_cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return a, pivots


def nullspace(m: Matrix, n_cols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : m x = 0} over Q, one vector per free column."""
    if not m:
        if n_cols is None:
            raise ValueError("n_cols is required for an empty matrix")
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    reduced, pivots = rref(m)
    width = len(reduced[0])
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def matmul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def transpose(a: Matrix) -> list[list]:
    return [list(col) for col in zip(*a)]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(m: Matrix) -> list[list[Fraction]]:
    """Inverse over Q; raises ValueError for singular input."""
    n = len(m)
    aug = [list(row) + e for row, e in zip(m, identity(n))]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]
