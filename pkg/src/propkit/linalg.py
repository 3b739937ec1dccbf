"""Exact linear algebra over the rationals.

Matrices are lists of rows; rows are lists of Fractions (ints accepted and
upgraded on demand).  Everything here is plain Gaussian elimination with
exact pivoting; sizes stay in the hundreds, so no effort is spent on
asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]], width: int) -> int:
    return len(rref(rows, width)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column of the RREF."""
    red, pivots = rref(rows, width)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve_in_rowspace(
    red: Sequence[Sequence[Fraction]], pivots: Sequence[int], vec: Sequence[Fraction]
) -> list[Fraction] | None:
    """Coordinates of ``vec`` in the span of RREF rows, or None if outside."""
    residue = list(map(Fraction, vec))
    coords = []
    for r, pc in enumerate(pivots):
        c = residue[pc]
        coords.append(c)
        if c != 0:
            residue = [a - c * b for a, b in zip(residue, red[r])]
    if any(x != 0 for x in residue):
        return None
    return coords


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    if not a or not b:
        return []
    cols = len(b[0])
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k, x in enumerate(row):
            if x:
                brk = b[k]
                for j in range(cols):
                    if brk[j]:
                        acc[j] += x * brk[j]
        out.append(acc)
    return out


def is_zero_matrix(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(all(x == 0 for x in row) for row in a)


def same_rowspace(
    rows_a: Sequence[Sequence[Fraction]], rows_b: Sequence[Sequence[Fraction]], width: int
) -> bool:
    ra, _ = rref(rows_a, width)
    rb, _ = rref(rows_b, width)
    return ra == rb
