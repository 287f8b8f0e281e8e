"""Exact dense linear algebra over one cyclotomic field.

Matrices are plain lists of lists of CycloElem.  Everything is Gauss-Jordan
over the exact field; canonical reduced row echelon bases double as
hashable keys for linear spans.
"""

from __future__ import annotations

from .field import CycloElem


def rref(rows) -> tuple[list[list[CycloElem]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    The input is not modified.  Pivot entries are scaled to 1 and cleared
    above and below, so equal spans give equal outputs.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def reduce_mod_rows(vec, rows, pivots) -> list[CycloElem]:
    """Reduce a vector modulo the row space given in rref form."""
    v = list(vec)
    for row, p in zip(rows, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_span(vec, rows, pivots) -> bool:
    return not any(reduce_mod_rows(vec, rows, pivots))


def null_space(rows, ncols: int, order: int) -> list[list[CycloElem]]:
    """Basis of the kernel of the matrix whose rows are given."""
    red, pivots = rref(rows)
    zero = CycloElem.zero(order)
    one = CycloElem.one(order)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, p in zip(red, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def solve_unique(rows, rhs) -> list[CycloElem] | None:
    """Solve A x = b where A has full column rank.

    Returns the unique solution, or None when the system is inconsistent.
    Raises ValueError if the columns of A are dependent (solution not
    unique when one exists).
    """
    if not rows:
        raise ValueError("empty system")
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise ValueError("system is underdetermined")
    order = rows[0][0].order
    sol = [CycloElem.zero(order)] * ncols
    for row, p in zip(red, pivots):
        sol[p] = row[-1]
    return sol


def det(mat) -> CycloElem:
    """Determinant of a square matrix over the field by Gaussian elimination."""
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    order = mat[0][0].order
    m = [list(r) for r in mat]
    sign = 1
    acc = CycloElem.one(order)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return CycloElem.zero(order)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        piv = m[c][c]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return acc if sign == 1 else -acc
