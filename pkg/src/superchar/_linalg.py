"""Exact linear algebra over the rationals.

Small dense Gaussian elimination on lists of ``Fraction``; the systems met in
this package have at most a few dozen unknowns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = list


def q(x) -> Fraction | int:
    """Normalize an exact number: integral values become ``int``."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns.

    Only the first ``ncols`` columns are used for pivoting (the rest ride
    along, e.g. an augmented right-hand side).
    """
    mat = [[Fraction(v) for v in r] for r in rows]
    if not mat:
        return [], []
    width = len(mat[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[list | None, int]:
    """Solve ``a x = b`` exactly.

    Returns ``(x, nullity)``; ``x`` is the particular solution with all free
    variables set to zero, or ``None`` when the system is inconsistent.
    """
    n = len(a[0]) if a else 0
    if not a:
        return [], n
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, piv = rref(aug, ncols=n)
    for row in red[len(piv):]:
        if row[n] != 0:
            return None, n - len(piv)
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = red[i][n]
    return [q(v) for v in x], n - len(piv)


def nullspace(a: Sequence[Sequence], n: int | None = None) -> list[list]:
    """Basis of ``{x : a x = 0}``."""
    n = len(a[0]) if a else (n or 0)
    if not a:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    red, piv = rref(a)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -red[i][f]
        basis.append([q(t) for t in v])
    return basis


class CoordinateSolver:
    """Coordinates of vectors with respect to a fixed linearly independent set.

    ``coords(v)`` returns the unique coefficient list expressing ``v`` in the
    given vectors, or ``None`` when ``v`` is outside their span.
    """

    def __init__(self, vectors: Sequence[Sequence]):
        self.vectors = [list(v) for v in vectors]
        k = len(self.vectors)
        self.dim = len(self.vectors[0]) if k else 0
        # columns are the vectors; rows are ambient coordinates
        cols = [[self.vectors[j][i] for j in range(k)] for i in range(self.dim)]
        red, piv = rref([r + [int(i == j) for j in range(self.dim)] for i, r in enumerate(cols)], ncols=k)
        if len(piv) != k:
            raise ValueError("vectors are linearly dependent")
        # row i of red (i < k) gives coefficient i as a functional of the input
        self._left = [red[i][k:] for i in range(k)]
        # rows after k give the linear constraints cutting out the span
        self._span_eqs = [red[i][k:] for i in range(k, self.dim)]

    def coords(self, v: Sequence) -> list | None:
        for eq in self._span_eqs:
            if sum(e * x for e, x in zip(eq, v)) != 0:
                return None
        return [q(sum(e * x for e, x in zip(row, v))) for row in self._left]
