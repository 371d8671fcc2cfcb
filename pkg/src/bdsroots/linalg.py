"""Small exact linear algebra over the rationals (Gauss-Jordan on Fractions)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence


def _norm(x: Fraction):
    return int(x) if x.denominator == 1 else x


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def determinant(matrix: Sequence[Sequence]):
    m = [[Fraction(x) for x in r] for r in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return _norm(det)


def inverse(matrix: Sequence[Sequence]) -> List[list]:
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [[_norm(x) for x in row[n:]] for row in m]


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> tuple:
    """Solve ``matrix @ x = rhs`` for square non-singular ``matrix``."""
    inv = inverse(matrix)
    return tuple(_norm(Fraction(sum(a * b for a, b in zip(row, rhs)))) for row in inv)


def matvec(matrix: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(_norm(Fraction(sum(a * b for a, b in zip(row, v))))
                 for row in matrix)


def columns(vectors: Sequence[Sequence]) -> List[list]:
    """Matrix whose columns are the given vectors."""
    return [list(col) for col in zip(*vectors)]
