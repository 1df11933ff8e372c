"""Exact linear algebra on small matrices.

Matrices are immutable tuples of row tuples holding Python ints (or Fractions
where a caller needs them).  Everything here is exact; floats never appear.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

Vector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v: Sequence, a: Matrix) -> tuple:
    return tuple(sum(x * y for x, y in zip(v, col)) for col in transpose(a))


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def column(a: Matrix, j: int) -> tuple:
    return tuple(row[j] for row in a)


def columns(a: Matrix) -> tuple:
    return transpose(a)


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return transpose(freeze(cols))


def determinant(a: Matrix) -> Fraction:
    """Determinant by fraction-free style elimination over Fraction."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def inverse(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; entries come back as ints when integral."""
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    out = []
    for row in rows:
        out.append(tuple(int(x) if x.denominator == 1 else x for x in row[n:]))
    return tuple(out)


def is_skew_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(n))


def column_sign_coherent(a: Matrix) -> bool:
    """True when every column's nonzero entries share one sign."""
    for col in transpose(a):
        signs = {x > 0 for x in col if x != 0}
        if len(signs) > 1:
            return False
    return True
