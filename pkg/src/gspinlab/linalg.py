"""Exact dense linear algebra over the rationals and prime fields.

Matrices are lists of row lists holding field scalars (Fraction over Q, ints
in [0, p) over F_p).  Everything is plain Gaussian elimination; sizes stay in
the desk range (at most a few hundred rows), so no fraction-free tricks are
needed.
"""

from __future__ import annotations

from .errors import NotInvertible
from .fields import FieldTag


def identity(n: int, field: FieldTag):
    one, zero = field.one(), field.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b, field: FieldTag):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = field.zero()
            for k in range(inner):
                acc = field.add(acc, field.mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(row)
    return out


def matvec(a, v, field: FieldTag):
    return [
        _dot(row, v, field)
        for row in a
    ]


def _dot(row, v, field):
    acc = field.zero()
    for x, y in zip(row, v):
        acc = field.add(acc, field.mul(x, y))
    return acc


def transpose(a):
    return [list(col) for col in zip(*a)]


def copy_matrix(a):
    return [list(row) for row in a]


def rref(a, field: FieldTag):
    """Reduced row echelon form.  Returns (matrix, pivot_columns)."""
    m = copy_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and not field.is_zero(m[i][c]):
                factor = m[i][c]
                m[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a, field: FieldTag) -> int:
    if not a:
        return 0
    _, pivots = rref(a, field)
    return len(pivots)


def nullspace(a, field: FieldTag):
    """Basis of the right kernel, one vector per free column."""
    if not a:
        return []
    cols = len(a[0])
    m, pivots = rref(a, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [field.zero()] * cols
        vec[free] = field.one()
        for r, c in enumerate(pivots):
            vec[c] = field.neg(m[r][free])
        basis.append(vec)
    return basis


def solve(a, b, field: FieldTag):
    """One solution of a x = b, or None when inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    m, pivots = rref(aug, field)
    if cols in pivots:
        return None
    x = [field.zero()] * cols
    for r, c in enumerate(pivots):
        x[c] = m[r][cols]
    return x


def inverse(a, field: FieldTag):
    n = len(a)
    aug = [list(a[i]) + identity(n, field)[i] for i in range(n)]
    m, pivots = rref(aug, field)
    if pivots != list(range(n)):
        raise NotInvertible("matrix is singular")
    return [row[n:] for row in m]


def det(a, field: FieldTag):
    n = len(a)
    m = copy_matrix(a)
    out = field.one()
    for c in range(n):
        pivot = next((i for i in range(c, n) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            return field.zero()
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            out = field.neg(out)
        out = field.mul(out, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if not field.is_zero(m[i][c]):
                factor = field.mul(m[i][c], inv)
                m[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(m[i], m[c])]
    return out
