"""Dense exact linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Everything here is small; no
attempt is made at asymptotic cleverness, only at determinism and exactness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = list


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (copy) and the list of pivot columns."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not mat:
        return mat, pivots
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def reduce_against(vec: Sequence[Fraction], mat: list[list[Fraction]], pivots: list[int]) -> list[Fraction]:
    """Residual of vec after elimination by an rref basis."""
    v = [Fraction(x) for x in vec]
    for row, c in zip(mat, pivots):
        if v[c]:
            f = v[c]
            v = [x - f * y for x, y in zip(v, row)]
    return v


def in_row_space(rows: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> bool:
    mat, pivots = rref(rows)
    return not any(reduce_against(vec, mat, pivots))


def solve_combination(
    columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> tuple[list[Fraction], bool] | None:
    """Solve sum_j c_j * columns[j] == target.

    Returns (coefficients, unique) or None when the system is inconsistent.
    Free coefficients are set to zero.
    """
    k = len(columns)
    m = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    mat, pivots = rref(aug)
    if k in pivots:
        return None
    sol = [Fraction(0)] * k
    for row, c in zip(mat, pivots):
        sol[c] = row[k]
    return sol, len(pivots) == k
