"""Exact dense linear algebra over the Gaussian rationals.

Matrices are plain lists of lists of :class:`~hermlie.scalars.GaussianRational`
(ints/Fractions are coerced).  Everything is fraction-free-enough for the
small systems this package solves (dimension at most a few dozen); clarity
wins over asymptotics here.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .scalars import GR_ONE, GR_ZERO, GaussianRational

Matrix = list  # list[list[GaussianRational]]
Vector = list  # list[GaussianRational]


def coerce_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[GaussianRational.coerce(x) for x in row] for row in rows]


def coerce_vector(v: Sequence) -> Vector:
    return [GaussianRational.coerce(x) for x in v]


def zeros(n: int, m: int) -> Matrix:
    return [[GR_ZERO for _ in range(m)] for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        for t in range(k):
            ait = a[i][t]
            if not ait:
                continue
            for j in range(m):
                if b[t][j]:
                    out[i][j] = out[i][j] + ait * b[t][j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((a[i][j] * v[j] for j in range(len(v)) if v[j]), GR_ZERO) for i in range(len(a))]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(mat: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (R, pivot_columns)."""
    a = coerce_matrix(mat) if mat else []
    if not a:
        return [], []
    rows, cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot_row = next((i for i in range(r, rows) if a[i][c]), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [a[i][j] - f * a[r][j] for j in range(cols)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat: Sequence[Sequence]) -> int:
    return len(rref(mat)[1])


def nullspace(mat: Sequence[Sequence], ncols: Optional[int] = None) -> list[Vector]:
    """Basis of the right kernel."""
    if not mat:
        return [[GR_ONE if i == j else GR_ZERO for i in range(ncols or 0)] for j in range(ncols or 0)]
    r, pivots = rref(mat)
    cols = len(r[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [GR_ZERO] * cols
        v[f] = GR_ONE
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(mat: Sequence[Sequence], rhs: Sequence) -> Optional[Vector]:
    """One particular solution of A x = b, or None if inconsistent."""
    a = coerce_matrix(mat)
    b = coerce_vector(rhs)
    if not a:
        return [] if not any(b) else None
    aug = [row + [b[i]] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    cols = len(a[0])
    if cols in pivots:
        return None
    x = [GR_ZERO] * cols
    for i, p in enumerate(pivots):
        x[p] = r[i][cols]
    return x


def inverse(mat: Sequence[Sequence]) -> Matrix:
    a = coerce_matrix(mat)
    n = len(a)
    aug = [a[i] + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def det(mat: Sequence[Sequence]) -> GaussianRational:
    a = coerce_matrix(mat)
    n = len(a)
    sign = GR_ONE
    out = GR_ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if a[i][c]), None)
        if pivot_row is None:
            return GR_ZERO
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            sign = -sign
        out = out * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [a[i][j] - f * a[c][j] for j in range(n)]
    return sign * out


def in_span(vectors: Sequence[Vector], v: Sequence) -> bool:
    """Is v in the span of the given vectors?"""
    if not vectors:
        return not any(GaussianRational.coerce(x) for x in v)
    a = transpose(coerce_matrix(vectors))
    return solve(a, v) is not None
