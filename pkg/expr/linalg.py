"""Exact Gaussian elimination over Gaussian rationals."""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .scalars import GaussianRational

Matrix = List[List[GaussianRational]]

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def as_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[GaussianRational.coerce(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[_ZERO] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j in range(cols):
                out[i][j] = out[i][j] + x * b[k][j]
    return out


def matvec(a: Matrix, v: Sequence[GaussianRational]) -> List[GaussianRational]:
    out = []
    for row in a:
        total = _ZERO
        for x, y in zip(row, v):
            total = total + x * y
        out.append(total)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def row_reduce(a: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    return len(row_reduce(a)[1])


def nullspace(a: Matrix) -> Matrix:
    """Basis of ``{x : a x = 0}`` as a list of vectors."""
    cols = len(a[0]) if a else 0
    reduced, pivots = row_reduce(a)
    free = [c for c in range(cols) if c not in pivots]
    basis: Matrix = []
    for f in free:
        vec = [_ZERO] * cols
        vec[f] = _ONE
        for row_index, p in enumerate(pivots):
            vec[p] = -reduced[row_index][f]
        basis.append(vec)
    return basis


def solve(a: Matrix, b: Sequence[GaussianRational]) -> Optional[List[GaussianRational]]:
    """Unique solution of ``a x = b`` or None when singular."""
    n = len(a)
    augmented = [list(row) + [b[i]] for i, row in enumerate(a)]
    reduced, pivots = row_reduce(augmented)
    if pivots != list(range(n)):
        return None
    return [reduced[i][n] for i in range(n)]


def inverse(a: Matrix) -> Optional[Matrix]:
    n = len(a)
    augmented = [list(row) + identity(n)[i] for i, row in enumerate(a)]
    reduced, pivots = row_reduce(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced]


def determinant(a: Matrix) -> GaussianRational:
    m = [list(row) for row in a]
    n = len(m)
    det = _ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if pivot is None:
            return _ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                factor = m[i][c] * inv
                m[i] = [x - factor * y for x, y in zip(m[i], m[c])]
    return det


__all__ = [
    "Matrix",
    "as_matrix",
    "determinant",
    "identity",
    "inverse",
    "matmul",
    "matvec",
    "nullspace",
    "rank",
    "row_reduce",
    "solve",
    "transpose",
    "zeros",
]
