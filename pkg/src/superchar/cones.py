"""Fourier-Motzkin elimination over exact rationals.

A system is a list of inequalities ``(coeffs, const)`` read as
``sum(coeffs[i] * x[i]) + const >= 0``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from ._linalg import q

Ineq = tuple[tuple, Fraction]


def _normalize(coeffs: Sequence, const) -> Ineq:
    vals = [Fraction(c) for c in coeffs] + [Fraction(const)]
    scale = max((abs(v) for v in vals[:-1]), default=0)
    if scale == 0:
        scale = abs(vals[-1]) or 1
    return tuple(q(v / scale) for v in vals[:-1]), q(vals[-1] / scale)


def _dedupe(rows: Sequence[Ineq]) -> list[Ineq]:
    # keep the tightest constant for each normalized direction
    best: dict[tuple, Fraction] = {}
    for coeffs, const in rows:
        c, k = _normalize(coeffs, const)
        if c in best:
            best[c] = min(best[c], k)
        else:
            best[c] = k
    return sorted(best.items())


def eliminate(rows: Sequence[Ineq], var: int) -> list[Ineq]:
    """Project the system along one variable (its coefficient becomes 0)."""
    pos, neg, rest = [], [], []
    for coeffs, const in rows:
        c = coeffs[var]
        (pos if c > 0 else neg if c < 0 else rest).append((coeffs, const))
    out = list(rest)
    for pc, pk in pos:
        for nc, nk in neg:
            a, b = pc[var], -nc[var]
            coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
            out.append((coeffs, b * pk + a * nk))
    return _dedupe(out)


def is_feasible(rows: Sequence[Ineq], nvars: int) -> bool:
    for v in range(nvars):
        rows = eliminate(rows, v)
    return all(const >= 0 for _, const in rows)


def projections(rows: Sequence[Ineq], nvars: int) -> list[list[Ineq]]:
    """Systems ``S_1 .. S_n`` where ``S_j`` involves only ``x_0 .. x_{j-1}``.

    ``S_n`` is the input; each earlier one eliminates the last variable of
    the next.
    """
    systems = [_dedupe(rows)]
    for v in range(nvars - 1, 0, -1):
        systems.append(eliminate(systems[-1], v))
    systems.reverse()
    return systems


def _bounds(rows: Sequence[Ineq], prefix: Sequence, j: int) -> tuple[Fraction | None, Fraction | None, bool]:
    lo = hi = None
    for coeffs, const in rows:
        rest = const + sum(c * x for c, x in zip(coeffs[:j], prefix))
        c = coeffs[j]
        if c == 0:
            if rest < 0:
                return None, None, False
        elif c > 0:
            b = Fraction(-rest) / c
            lo = b if lo is None else max(lo, b)
        else:
            b = Fraction(rest) / -c
            hi = b if hi is None else min(hi, b)
    return lo, hi, True


class Unbounded(ValueError):
    pass


def integer_points(rows: Sequence[Ineq], nvars: int) -> Iterator[tuple[int, ...]]:
    """All integer points of a bounded rational polyhedron, lexicographically."""
    if nvars == 0:
        if all(const >= 0 for _, const in rows):
            yield ()
        return
    systems = projections(rows, nvars)

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(prefix)
        lo, hi, ok = _bounds(systems[j], prefix, j)
        if not ok:
            return
        if lo is None or hi is None:
            raise Unbounded("polyhedron is unbounded in variable %d" % j)
        for x in range(math.ceil(lo), math.floor(hi) + 1):
            prefix.append(x)
            if j + 1 == nvars:
                yield tuple(prefix)
            else:
                yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def variable_range(rows: Sequence[Ineq], nvars: int, var: int) -> tuple[Fraction | None, Fraction | None]:
    """Exact min and max of one variable over the polyhedron (``None`` if unbounded).

    Raises ``ValueError`` on an empty polyhedron.
    """
    for v in range(nvars):
        if v != var:
            rows = eliminate(rows, v)
    # every other coefficient is zero now, so a zero prefix is harmless
    lo, hi, ok = _bounds(rows, [0] * var, var)
    if not ok or (lo is not None and hi is not None and lo > hi):
        raise ValueError("empty polyhedron")
    return lo, hi
