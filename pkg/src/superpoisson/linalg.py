"""Dense exact matrices as tuples of tuples of Fraction."""
from __future__ import annotations

from fractions import Fraction

from .graded import Element, GradedBasis, Tensor, accumulate, to_scalar

Matrix = tuple


def matrix(rows) -> Matrix:
    rows = tuple(tuple(to_scalar(c) for c in row) for row in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((Fraction(0),) * m for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(a: Matrix):
    return (len(a), len(a[0]) if a else 0)


def mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b)) if b else ()
    return tuple(tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    c = to_scalar(c)
    return tuple(tuple(c * x for x in r) for r in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def is_zero(a: Matrix) -> bool:
    return not any(x for r in a for x in r)


def apply(a: Matrix, v: Tensor, basis: GradedBasis | None = None) -> Element:
    """Matrix times the coordinate column of a rank-1 tensor."""
    basis = basis or v.basis
    out = {}
    for (j,), c in v.items():
        for i in range(len(a)):
            x = a[i][j]
            if x:
                out[(i,)] = out.get((i,), 0) + x * c
    return accumulate(basis, 1, out)


def column(a: Matrix, j: int, basis: GradedBasis) -> Element:
    return accumulate(basis, 1, {(i,): a[i][j] for i in range(len(a)) if a[i][j]})


def from_columns(cols, n: int) -> Matrix:
    """Build an n-row matrix whose column j is the rank-1 tensor cols[j]."""
    rows = [[Fraction(0)] * len(cols) for _ in range(n)]
    for j, col in enumerate(cols):
        for (i,), c in col.items():
            rows[i][j] = c
    return tuple(tuple(r) for r in rows)


def rank(a: Matrix) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    rows = [list(r) for r in a]
    if not rows:
        return 0
    n, m = len(rows), len(rows[0])
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == n:
            break
    return r


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        rows[c], rows[pivot] = rows[pivot], rows[c]
        p = rows[c][c]
        rows[c] = [x / p for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(r[n:]) for r in rows)
