"""Small exact-matrix helpers (lists of lists of backend scalars).

Gauss-Jordan inversion works over any of the scalar backends; exact
pivoting prefers divisors the radical class can invert (one or two
terms) and raises :class:`~lpgg.scalars.InexactDivisionError` when no
usable pivot exists, so callers can fall back to floats.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import EXACT, InexactDivisionError, Radical, coerce, is_zero

Matrix = list[list]


def identity(n: int, backend: str = EXACT) -> Matrix:
    one = coerce(1, backend)
    zero = coerce(0, backend)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = a[i][0] * b[0][j]
            for k in range(1, inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def vec_mat(row: list, m: Matrix) -> list:
    return [
        sum_scalars(row[k] * m[k][j] for k in range(len(row)))
        for j in range(len(m[0]))
    ]


def sum_scalars(values) -> object:
    it = iter(values)
    acc = next(it)
    for v in it:
        acc = acc + v
    return acc


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def _pivot_cost(value) -> int:
    if isinstance(value, Radical):
        k = len(value.terms())
        return k if k <= 2 else 99
    return 1


def invert(matrix: Matrix, backend: str = EXACT) -> Matrix:
    """Gauss-Jordan inverse; raises on singular or inexact division."""
    n = len(matrix)
    a = [[coerce(v, backend) for v in row] for row in matrix]
    inv = identity(n, backend)
    for col in range(n):
        candidates = [r for r in range(col, n) if not is_zero(a[r][col])]
        if not candidates:
            raise ZeroDivisionError("singular matrix")
        pivot_row = min(candidates, key=lambda r: _pivot_cost(a[r][col]))
        if _pivot_cost(a[pivot_row][col]) > 2:
            raise InexactDivisionError(
                "no exactly invertible pivot in column %d" % col
            )
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = a[col][col]
        if isinstance(pivot, Radical):
            pivot_inv = pivot.inverse()
        else:
            pivot_inv = 1 / pivot
        a[col] = [v * pivot_inv for v in a[col]]
        inv[col] = [v * pivot_inv for v in inv[col]]
        for r in range(n):
            if r == col or is_zero(a[r][col]):
                continue
            factor = a[r][col]
            a[r] = [a[r][j] - factor * a[col][j] for j in range(n)]
            inv[r] = [inv[r][j] - factor * inv[col][j] for j in range(n)]
    return inv


def rank(matrix: Matrix) -> int:
    """Row-echelon rank over Fractions (entries must be rational)."""
    rows = [
        [v.as_fraction() if isinstance(v, Radical) else Fraction(v) for v in row]
        for row in matrix
    ]
    r = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b) or any(len(ra) != len(rb) for ra, rb in zip(a, b)):
        return False
    for ra, rb in zip(a, b):
        for va, vb in zip(ra, rb):
            if isinstance(va, Radical) or isinstance(vb, Radical):
                if Radical(0) + va != Radical(0) + vb:
                    return False
            elif va != vb:
                return False
    return True
