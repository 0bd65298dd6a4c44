"""Gaussian elimination over Q with :class:`fractions.Fraction` entries."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def rref(rows: Sequence[Sequence[Fraction | int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q.  Integer input goes through fraction-free elimination."""
    if not rows:
        return 0
    if all(isinstance(x, int) for row in rows for x in row):
        return _bareiss_rank([list(row) for row in rows])
    return len(rref(rows)[1])


def _bareiss_rank(m: list[list[int]]) -> int:
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            m[i] = [(p * x - f * y) // prev for x, y in zip(m[i], m[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def solve_affine(a: Sequence[Sequence[Fraction | int]], b: Sequence[Fraction | int]):
    """Solve ``a x = b`` exactly.

    Returns ``(x, unique)`` where ``x`` is the minimum Euclidean-norm solution,
    or ``None`` when the system is inconsistent.
    """
    ncols = len(a[0])
    aug, pivots = rref([list(row) + [bi] for row, bi in zip(a, b)])
    if ncols in pivots:
        return None, False
    if len(pivots) == ncols:
        x = [Fraction(0)] * ncols
        for i, c in enumerate(pivots):
            x[c] = aug[i][-1]
        return x, True
    # Minimum-norm point: x = B^T (B B^T)^{-1} rhs, with B the independent rows.
    basis = [row[:-1] for row in aug[: len(pivots)]]
    rhs = [row[-1] for row in aug[: len(pivots)]]
    gram = [[sum((u * v for u, v in zip(bi, bj)), Fraction(0)) for bj in basis] for bi in basis]
    lam, _ = solve_affine(gram, rhs)
    x = [sum((lam[i] * basis[i][j] for i in range(len(basis))), Fraction(0)) for j in range(ncols)]
    return x, False
