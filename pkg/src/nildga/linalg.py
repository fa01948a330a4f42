"""Dense exact linear algebra over Q(i).

Matrices are lists of row lists of :class:`GaussianRational`.  Sizes in this
package stay below a few hundred, so plain Gauss-Jordan elimination is fine.
"""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, GaussianRational

Matrix = list[list[GaussianRational]]
Vector = list[GaussianRational]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for k in range(n):
        m[k][k] = ONE
    return m


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def conj_transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [[a[r][c].conjugate() for r in range(len(a))] for c in range(len(a[0]))]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return zeros(rows, cols)
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def matvec(a: Matrix, v: Sequence[GaussianRational]) -> Vector:
    out = []
    for row in a:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in a]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = next((k for k in range(r, rows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        for k in range(rows):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [x - f * y if y else x for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, cols: int | None = None) -> list[Vector]:
    """Basis of ``{x : a x = 0}``; one vector per free column, RREF normalized."""
    if not a:
        n = cols or 0
        return [[ONE if k == j else ZERO for k in range(n)] for j in range(n)]
    r, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pc in zip(r, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence[GaussianRational]) -> Vector | None:
    """One solution of ``a x = b`` (free variables zero) or ``None`` if inconsistent."""
    rows, cols = shape(a)
    aug = [list(a[k]) + [b[k]] for k in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for row, pc in zip(r, pivots):
        x[pc] = row[cols]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(a[k]) + [ONE if j == k else ZERO for j in range(n)] for k in range(n)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]


def column(a: Matrix, j: int) -> Vector:
    return [row[j] for row in a]


def from_columns(cols: Sequence[Sequence[GaussianRational]], nrows: int) -> Matrix:
    if not cols:
        return [[] for _ in range(nrows)]
    return [[c[r] for c in cols] for r in range(nrows)]


def inner(u: Sequence[GaussianRational], v: Sequence[GaussianRational]) -> GaussianRational:
    """Hermitian product, conjugate-linear in the first slot."""
    s = ZERO
    for x, y in zip(u, v):
        if x and y:
            s = s + x.conjugate() * y
    return s


def is_zero_vector(v: Sequence[GaussianRational]) -> bool:
    return not any(v)
