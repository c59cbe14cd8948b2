"""Exact determinants of small polynomial matrices."""

from __future__ import annotations

from typing import Sequence

from .ring import PolyRing, Polynomial


def determinant(grid: Sequence[Sequence[Polynomial | int]], ring: PolyRing) -> Polynomial:
    """Cofactor expansion along the row or column with the most zero entries.

    ``grid`` entries may be polynomials of ``ring`` or integer constants.
    """
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("determinant of a non-square matrix")
    rows = [[e if isinstance(e, Polynomial) else ring.constant(e) for e in row] for row in grid]
    return _det(rows, ring)


def _det(m: list[list[Polynomial]], ring: PolyRing) -> Polynomial:
    n = len(m)
    if n == 0:
        return ring.one
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    row_zeros = [sum(1 for e in row if e.is_zero) for row in m]
    col_zeros = [sum(1 for i in range(n) if m[i][j].is_zero) for j in range(n)]
    best_row = max(range(n), key=lambda i: row_zeros[i])
    best_col = max(range(n), key=lambda j: col_zeros[j])
    if row_zeros[best_row] == n or col_zeros[best_col] == n:
        return ring.zero
    total = ring.zero
    if row_zeros[best_row] >= col_zeros[best_col]:
        i = best_row
        for j in range(n):
            if m[i][j].is_zero:
                continue
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(m) if k != i]
            term = m[i][j] * _det(minor, ring)
            total = total - term if (i + j) % 2 else total + term
    else:
        j = best_col
        for i in range(n):
            if m[i][j].is_zero:
                continue
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(m) if k != i]
            term = m[i][j] * _det(minor, ring)
            total = total - term if (i + j) % 2 else total + term
    return total
