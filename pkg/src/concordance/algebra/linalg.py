"""Exact dense linear algebra on nested lists."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .polynomial import Polynomial, interpolate

Matrix = List[List]


def det_bareiss(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_field(m: Sequence[Sequence]):
    """Determinant over an exact field (Fraction or GaussianRational entries)."""
    a = [list(row) for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return 0 * det
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        akk = a[k][k]
        det = akk * det
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / akk
                for j in range(k, n):
                    a[i][j] = a[i][j] - f * a[k][j]
    return det


def det_pencil(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Polynomial:
    """det(y*A + B) as a polynomial in y, for integer matrices A, B.

    Evaluated at n+1 integer points with Bareiss and interpolated.
    """
    n = len(a)
    ys = list(range(-(n // 2), n - n // 2 + 1))
    vals = [det_bareiss([[y * a[i][j] + b[i][j] for j in range(n)] for i in range(n)])
            for y in ys]
    return interpolate([Fraction(y) for y in ys], [Fraction(v) for v in vals])


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> Matrix:
    """Basis of {v in Z^n : row . v = 0 for every row}.

    Column operations by unimodular moves bring the matrix to lower echelon
    form; the transformation columns past the rank span the kernel, and the
    basis is primitive (saturated) because the moves are unimodular.
    """
    a = [list(map(int, r)) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns are basis vectors

    def col_op(dst, src, f):
        for row in a:
            row[dst] -= f * row[src]
        for row in u:
            row[dst] -= f * row[src]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    rank = 0
    for r in range(len(a)):
        if rank == n:
            break
        while True:
            nz = [j for j in range(rank, n) if a[r][j]]
            if not nz:
                break
            p = min(nz, key=lambda j: abs(a[r][j]))
            if p != rank:
                col_swap(p, rank)
            done = True
            for j in range(rank + 1, n):
                if a[r][j]:
                    col_op(j, rank, a[r][j] // a[r][rank])
                    if a[r][j]:
                        done = False
            if done:
                rank += 1
                break
    return [[u[i][j] for i in range(n)] for j in range(rank, n)]


def matrix_rank(m: Sequence[Sequence]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(rows):
            if r != rank and a[r][c]:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank
