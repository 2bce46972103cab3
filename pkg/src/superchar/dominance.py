"""Dominance tests, highest weights along odd reflections, and the sets Y_λ."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import cones
from .base_forest import Base, contains_root, base_graph, check_pr1, odd_reflect, satisfies_coro_hypothesis
from .root_datum import RootDatum, Weight, pair_hbeta


class Unsupported(ValueError):
    """Raised when no criterion is available for the family."""


def _natural(x) -> bool:
    return isinstance(x, int) and x >= 0


def is_dominant_pi(datum: RootDatum, lam: Weight) -> bool:
    """``<λ, α^∨> ∈ ℕ`` for every α in π."""
    lam = datum.normalize(lam)
    return all(_natural(datum.coroot_pairing(lam, a)) for a in datum.pi)


def _step(datum: RootDatum, lam: Weight, beta: Weight) -> Weight:
    return lam if pair_hbeta(datum, lam, beta) == 0 else datum.normalize(lam - beta)


def track_highest_weight(datum: RootDatum, lam: Weight, start: Base, path: Sequence[Weight]) -> Weight:
    """The highest weight of ``L(λ; start)`` with respect to the base at the end of ``path``."""
    base = start
    lam = datum.normalize(lam)
    for beta in path:
        beta = datum.normalize(beta)
        if beta not in base.iso_subset:
            raise ValueError(f"{beta} is not an isotropic simple root of {base}")
        lam = _step(datum, lam, beta)
        base = odd_reflect(datum, base, beta)
    return lam


def highest_weights(datum: RootDatum, base: Base, lam: Weight) -> dict[Base, Weight]:
    """Highest weight of ``L(λ; base)`` with respect to every base reachable from ``base``."""
    g = base_graph(datum, base)
    lam = datum.normalize(lam)
    out = {base: lam}
    # BFS order guarantees parents come first
    for b in sorted(g.paths, key=lambda b: len(g.paths[b])):
        if b != base:
            parent, beta = g.tree[b]
            out[b] = _step(datum, out[parent], beta)
    return out


def _q_dominant(datum: RootDatum, lam: Weight) -> bool:
    if not is_dominant_pi(datum, lam):
        return False
    e = lam.eps
    return all(e[i] != e[i + 1] or e[i] == 0 for i in range(len(e) - 1))


def is_dominant_integrable(datum: RootDatum, base: Base, lam: Weight) -> bool:
    """Whether ``L(λ; base)`` is finite dimensional.

    Kac-Moody families: for each α in π some base containing α (or α/2)
    must give a highest weight with ``<hwt, α^∨> ∈ ℕ``. For q_n:
    ``λ ∈ P⁺(π)`` and ``λ_i = λ_{i+1}`` forces ``λ_i = 0``.
    """
    return _is_dominant_integrable(datum, base, datum.normalize(lam))


@lru_cache(maxsize=65536)
def _is_dominant_integrable(datum: RootDatum, base: Base, lam: Weight) -> bool:
    if datum.family == "q":
        return _q_dominant(datum, lam)
    if datum.family == "p":
        raise Unsupported("no dominance criterion is provided for p_n")
    if not is_dominant_pi(datum, lam):
        return False
    hw = highest_weights(datum, base, lam)
    for a in datum.pi:
        if not any(_natural(datum.coroot_pairing(mu, a)) for b, mu in hw.items() if contains_root(b, a)):
            return False
    return True


def is_dominant_integrable_closed(datum: RootDatum, base: Base, lam: Weight, check: bool = True) -> bool:
    """``λ ∈ P⁺(π)`` and ``λ - β ∈ P⁺(π)`` whenever β ∈ Σ_iso has ``<λ, h_β> ≠ 0``.

    Valid only for bases passing :func:`satisfies_coro_hypothesis`.
    """
    if not datum.is_kac_moody:
        raise Unsupported(f"the closed form is stated for Kac-Moody families, not {datum.name}")
    if check and not satisfies_coro_hypothesis(datum, base):
        raise ValueError(f"{base} fails the hypothesis checked by satisfies_coro_hypothesis")
    lam = datum.normalize(lam)
    if not is_dominant_pi(datum, lam):
        return False
    return all(is_dominant_pi(datum, lam - b) for b in base.iso_subset if pair_hbeta(datum, lam, b) != 0)


def y_polytope(datum: RootDatum, base: Base, lam: Weight) -> list:
    """Inequalities on ``k`` for ``λ - Σ k_i σ_i`` to lie in the rational dominant cone."""
    lam = datum.normalize(lam)
    k = len(base.sigma)
    rows = [(tuple(int(i == j) for j in range(k)), 0) for i in range(k)]
    for a in datum.pi:
        rows.append((tuple(-datum.coroot_pairing(s, a) for s in base.sigma), datum.coroot_pairing(lam, a)))
    return rows


def enumerate_Y(datum: RootDatum, base: Base, lam: Weight) -> list[Weight]:
    """``Y_λ = {μ ∈ P⁺(π) : μ < λ}``, sorted.

    Refuses bases failing (Pr1), where the set may be infinite.
    """
    if not check_pr1(datum, base):
        raise ValueError(f"{base} fails (Pr1); Y_λ may be infinite")
    lam = datum.normalize(lam)
    out = set()
    for k in cones.integer_points(y_polytope(datum, base, lam), len(base.sigma)):
        if not any(k):
            continue
        mu = lam
        for c, s in zip(k, base.sigma):
            if c:
                mu = mu - s * c
        mu = datum.normalize(mu)
        if is_dominant_pi(datum, mu):
            out.add(mu)
    return sorted(out)


__all__ = [
    "Unsupported",
    "is_dominant_pi",
    "track_highest_weight",
    "highest_weights",
    "is_dominant_integrable",
    "is_dominant_integrable_closed",
    "y_polytope",
    "enumerate_Y",
]
