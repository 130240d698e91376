"""Gaussian elimination over the cyclotomic field."""
from __future__ import annotations

from .cyclotomic import CycField, CycScalar


def rref(rows: list[list[CycScalar]], ncols: int) -> tuple[list[list[CycScalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    A = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [v * inv if v else v for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b if b else a for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def nullspace(rows: list[list[CycScalar]], ncols: int, field: CycField) -> list[list[CycScalar]]:
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(columns: list[list[CycScalar]], target: list[CycScalar], field: CycField):
    """Coefficients a with sum a_k columns[k] = target, or None if inconsistent."""
    n = len(columns)
    rows = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    R, pivots = rref(rows, n + 1)
    if n in pivots:
        return None
    out = [field.zero] * n
    for row, p in zip(R, pivots):
        out[p] = row[n]
    return out
