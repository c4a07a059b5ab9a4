"""Small exact linear algebra over the rationals.

Row reduction over Q is used for solving and nullspaces; ranks go through
fraction-free (Bareiss) elimination on integer matrices after clearing
denominators, which keeps intermediate entries integral.
"""

from __future__ import annotations

from math import gcd

from .rationals import Q

__all__ = ["rref", "solve", "nullspace", "rank"]


def rref(matrix: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot column indices)."""
    rows = [list(map(Q, r)) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(matrix: list[list], rhs: list) -> list | None:
    """One exact solution of A x = b (free variables set to 0), or None."""
    if not matrix:
        return [] if all(Q(v) == 0 for v in rhs) else None
    ncols = len(matrix[0])
    aug = [list(map(Q, row)) + [Q(b)] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None  # pivot in the rhs column: inconsistent
    x = [Q(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


def nullspace(matrix: list[list]) -> list[list]:
    """Basis of the kernel of A over Q, in a deterministic order."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q(0)] * ncols
        v[fc] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def _integer_rows(matrix: list[list]) -> list[list[int]]:
    out = []
    for row in matrix:
        row = list(map(Q, row))
        denom = 1
        for v in row:
            denom = denom * v.denominator // gcd(denom, int(v.denominator))
        out.append([int(v.numerator) * (denom // int(v.denominator)) for v in row])
    return out


def rank(matrix: list[list]) -> int:
    """Exact rank via fraction-free Bareiss elimination on cleared rows."""
    rows = _integer_rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, len(rows)):
            if all(v == 0 for v in rows[i]):
                continue
            fi = rows[i][c]
            rows[i] = [
                (pivot * rows[i][j] - fi * rows[r][j]) // prev for j in range(ncols)
            ]
        prev = pivot
        r += 1
        if r == len(rows):
            break
    return r
