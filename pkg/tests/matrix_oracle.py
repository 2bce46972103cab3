"""Independent matrix realizations of the supported families.

Each family is built as a space of (m+n)-size supermatrices cut out by
linear conditions. Root spaces come from the adjoint action of the diagonal
torus, and ``h_β`` from anticommutators of odd root vectors. None of this
touches the library's root formulas; it is the ground truth they are
checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


@dataclass
class Realization:
    # one entry per basis vector of V: (coordinate vector in ε/δ coordinates, parity 0/1)
    vectors: list
    # linear conditions on a matrix X of given parity: callable (X, parity) -> flat array that must vanish
    condition: object
    # coordinate index -> basis vector whose torus eigenvalue reads that coordinate
    readout: dict
    # parity of the odd part that carries the isotropic root vectors
    ncoords: int

    @property
    def size(self) -> int:
        return len(self.vectors)


def _nullspace(a: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    if a.size == 0 or a.shape[0] == 0:
        return np.eye(a.shape[1])
    _, s, vt = np.linalg.svd(a)
    rank = int((s > tol).sum())
    return vt[rank:].T


def gl(m: int, n: int) -> Realization:
    vecs = [(tuple(int(k == i) for k in range(m + n)), 0) for i in range(m)]
    vecs += [(tuple(int(k == m + j) for k in range(m + n)), 1) for j in range(n)]
    return Realization(vecs, lambda X, p: np.zeros(0), {i: i for i in range(m + n)}, m + n)


def osp(M: int, n: int) -> Realization:
    """osp(M|2n) preserving an even supersymmetric form."""
    m = M // 2
    k = m + n
    e = lambda i, s: tuple(s * int(t == i) for t in range(k))
    vecs = [(e(i, 1), 0) for i in range(m)] + [(e(i, -1), 0) for i in range(m)]
    if M % 2:
        vecs.append((tuple([0] * k), 0))
    off = len(vecs)
    vecs += [(e(m + j, 1), 1) for j in range(n)] + [(e(m + j, -1), 1) for j in range(n)]
    size = len(vecs)
    B = np.zeros((size, size))
    for i in range(m):
        B[i, m + i] = B[m + i, i] = 1
    if M % 2:
        B[2 * m, 2 * m] = 1
    for j in range(n):
        B[off + j, off + n + j] = 1
        B[off + n + j, off + j] = -1
    par = [p for _, p in vecs]

    def condition(X, p):
        out = []
        for a, b in itertools.product(range(size), repeat=2):
            sign = (-1) ** (p * par[a])
            out.append(X[:, a] @ B[:, b] + sign * (B[a, :] @ X[:, b]))
        return np.array(out)

    readout = {i: i for i in range(m)}
    readout.update({m + j: off + j for j in range(n)})
    return Realization(vecs, condition, readout, k)


def q(n: int) -> Realization:
    """q_n: supermatrices graded-commuting with J = [[0, I], [-I, 0]]."""
    vecs = [(tuple(int(k == i) for k in range(n)), 0) for i in range(n)]
    vecs += [(tuple(int(k == i) for k in range(n)), 1) for i in range(n)]
    J = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])

    def condition(X, p):
        return (X @ J - (-1) ** p * (J @ X)).ravel()

    return Realization(vecs, condition, {i: i for i in range(n)}, n)


def p(n: int) -> Realization:
    """p_n: [[A, B], [C, -Aᵗ]] with B symmetric and C skew."""
    vecs = [(tuple(int(k == i) for k in range(n)), 0) for i in range(n)]
    vecs += [(tuple(-int(k == i) for k in range(n)), 1) for i in range(n)]

    def condition(X, par):
        A, Bm, C, D = X[:n, :n], X[:n, n:], X[n:, :n], X[n:, n:]
        return np.concatenate([(D + A.T).ravel(), (Bm - Bm.T).ravel(), (C + C.T).ravel()])

    return Realization(vecs, condition, {i: i for i in range(n)}, n)


def root_spaces(r: Realization) -> dict:
    """``{(weight, parity): basis of the root space as a list of matrices}`` for nonzero weights."""
    size = r.size
    groups: dict = {}
    for c, a in itertools.product(range(size), repeat=2):
        w = tuple(x - y for x, y in zip(r.vectors[c][0], r.vectors[a][0]))
        par = (r.vectors[c][1] + r.vectors[a][1]) % 2
        groups.setdefault((w, par), []).append((c, a))
    out = {}
    for (w, par), cells in groups.items():
        if not any(w):
            continue
        cols = []
        for c, a in cells:
            X = np.zeros((size, size))
            X[c, a] = 1
            cols.append(X)
        rows = np.array([np.atleast_1d(r.condition(X, par)) for X in cols]).T
        ns = _nullspace(rows) if rows.size else np.eye(len(cols))
        if ns.shape[1]:
            out[(w, par)] = [sum(v[i] * cols[i] for i in range(len(cols))) for v in ns.T]
    return out


def roots(r: Realization) -> dict:
    """``{weight: set of parities}``."""
    out: dict = {}
    for w, par in root_spaces(r):
        out.setdefault(w, set()).add(par)
    return out


def h_functional(r: Realization, beta: tuple) -> np.ndarray | None:
    """The functional ``ν ↦ ν(h_β)`` as a coordinate vector, from odd root vectors of ±β."""
    spaces = root_spaces(r)
    neg = tuple(-x for x in beta)
    if (beta, 1) not in spaces or (neg, 1) not in spaces:
        return None
    best = None
    for e in spaces[(beta, 1)]:
        for f in spaces[(neg, 1)]:
            h = e @ f + f @ e
            vec = np.array([h[r.readout[i], r.readout[i]] for i in range(r.ncoords)])
            if best is None or np.abs(vec).max() > np.abs(best).max():
                best = vec
    return best


def supertrace_form(r: Realization, mu: tuple, nu: tuple) -> float:
    """``str(diag(μ) diag(ν))`` for gl, where diag places coordinates on the torus."""
    total = 0.0
    for vec, par in r.vectors:
        a = sum(x * y for x, y in zip(vec, mu))
        b = sum(x * y for x, y in zip(vec, nu))
        total += (-1) ** par * a * b
    return total
