"""Exact dense linear algebra over a tower field (row reduction, rank, kernel, determinant)."""

from __future__ import annotations

from typing import Sequence

from .field import FieldElement, TowerField


def row_reduce(rows: Sequence[Sequence[FieldElement]], tower: TowerField):
    """Reduced row echelon form.  Returns (rref rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv if v else v for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[FieldElement]], tower: TowerField) -> int:
    """Rank by forward elimination only (no back substitution)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        pivot_row = m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b if b else a for a, b in zip(m[i], pivot_row)]
        r += 1
    return r


def kernel(rows: Sequence[Sequence[FieldElement]], tower: TowerField, ncols: int | None = None):
    """Basis of the right kernel {v : M v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_reduce(rows, tower) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [tower.zero] * ncols
        v[f] = tower.one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def determinant(matrix: Sequence[Sequence[FieldElement]], tower: TowerField) -> FieldElement:
    m = [list(r) for r in matrix]
    n = len(m)
    det = tower.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return tower.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[c])]
    return det
