"""Root data for the supported Lie superalgebra families.

Weights live in the rational span of ``ε_1..ε_m, δ_1..δ_n``. Every family is
realized by formulas for its roots; the formulas were checked against the
defining matrix realizations (see ``tests/matrix_oracle.py``).

Family names and coordinates:

==========  =====================  ==========================
family      algebra                coordinates
==========  =====================  ==========================
``gl``      gl(m|n)                m ε's, n δ's
``sl``      sl(m|n), m != n        as gl, modulo the supertrace
``ospB``    osp(2m+1|2n)           m ε's, n δ's
``ospD``    osp(2m|2n), m >= 1     m ε's, n δ's
``q``       q_n                    n ε's
``p``       p_n                    n ε's
==========  =====================  ==========================
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from ._linalg import CoordinateSolver, q

FAMILIES = ("gl", "sl", "q", "p", "ospB", "ospD")
KAC_MOODY = ("gl", "sl", "ospB", "ospD")

EVEN, ODD = "even", "odd"


@dataclass(frozen=True, order=True)
class Weight:
    """An element of t* with exact rational coordinates."""

    eps: tuple
    delta: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(q(x) for x in self.eps))
        object.__setattr__(self, "delta", tuple(q(x) for x in self.delta))

    @classmethod
    def from_coords(cls, coords: Sequence, m: int) -> "Weight":
        coords = tuple(coords)
        return cls(coords[:m], coords[m:])

    @property
    def coords(self) -> tuple:
        return self.eps + self.delta

    def _with(self, coords) -> "Weight":
        return Weight.from_coords(coords, len(self.eps))

    def __add__(self, other: "Weight") -> "Weight":
        return self._with(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return self._with(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return self._with(-a for a in self.coords)

    def __mul__(self, c) -> "Weight":
        c = Fraction(c)
        return self._with(c * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.coords)

    def __str__(self) -> str:
        parts = []
        for sym, vals in (("ε", self.eps), ("δ", self.delta)):
            for i, c in enumerate(vals, 1):
                if c == 0:
                    continue
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                coef = "" if mag == 1 else (f"({mag})" if isinstance(mag, Fraction) else str(mag))
                parts.append(f"{sign}{coef}{sym}{i}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def euclid(a: Weight, b: Weight) -> Fraction:
    return sum((x * y for x, y in zip(a.coords, b.coords)), 0)


@dataclass(frozen=True)
class Root:
    weight: Weight
    parity: str
    isotropic: bool


@dataclass(frozen=True)
class RootDatum:
    """Exact root data of one family instance.

    Use :func:`build_root_datum` rather than the constructor.
    """

    family: str
    m: int
    n: int

    # -- construction helpers ------------------------------------------------
    def weight(self, eps: Sequence = (), delta: Sequence = ()) -> Weight:
        eps = tuple(eps) or (0,) * self.m
        delta = tuple(delta) or (0,) * self.n
        if len(eps) != self.m or len(delta) != self.n:
            raise ValueError(f"weight needs {self.m} ε and {self.n} δ coordinates")
        return self.normalize(Weight(eps, delta))

    def normalize(self, w: Weight) -> Weight:
        """Canonical representative (only sl has a nontrivial quotient)."""
        if self.family != "sl":
            return w
        s = self.supertrace
        c = Fraction(self.form(w, s)) / (self.m - self.n)
        return w - s * c if c else w

    @property
    def zero(self) -> Weight:
        return Weight((0,) * self.m, (0,) * self.n)

    def e(self, i: int) -> Weight:
        """The weight ε_i (1-based)."""
        if not 1 <= i <= self.m:
            raise ValueError(f"ε_{i} out of range for {self.name}")
        return Weight(tuple(int(k == i - 1) for k in range(self.m)), (0,) * self.n)

    def d(self, j: int) -> Weight:
        """The weight δ_j (1-based)."""
        if not 1 <= j <= self.n:
            raise ValueError(f"δ_{j} out of range for {self.name}")
        return Weight((0,) * self.m, tuple(int(k == j - 1) for k in range(self.n)))

    @property
    def supertrace(self) -> Weight:
        return Weight((1,) * self.m, (-1,) * self.n)

    @property
    def dim(self) -> int:
        return self.m + self.n

    # -- classification ------------------------------------------------------
    @property
    def is_kac_moody(self) -> bool:
        return self.family in KAC_MOODY

    @property
    def cartan_is_torus(self) -> bool:
        """``True`` when h = t; ``False`` for the q family."""
        return self.family != "q"

    @property
    def name(self) -> str:
        if self.family in ("gl", "sl"):
            return f"{self.family}({self.m}|{self.n})"
        if self.family == "ospB":
            return f"osp({2 * self.m + 1}|{2 * self.n})"
        if self.family == "ospD":
            return f"osp({2 * self.m}|{2 * self.n})"
        return f"{self.family}({self.m})"

    def __str__(self) -> str:
        return self.name

    # -- roots ---------------------------------------------------------------
    @cached_property
    def roots(self) -> tuple[Root, ...]:
        e, d = self.e, self.d
        m, n = self.m, self.n
        out: list[Root] = []

        def add(w: Weight, parity: str, iso: bool = False) -> None:
            out.append(Root(self.normalize(w), parity, iso))

        f = self.family
        if f in ("gl", "sl"):
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    if i != j:
                        add(e(i) - e(j), EVEN)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i != j:
                        add(d(i) - d(j), EVEN)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    add(e(i) - d(j), ODD, True)
                    add(d(j) - e(i), ODD, True)
        elif f in ("ospB", "ospD"):
            for i in range(1, m + 1):
                for j in range(i + 1, m + 1):
                    for s1 in (1, -1):
                        for s2 in (1, -1):
                            add(s1 * e(i) + s2 * e(j), EVEN)
                if f == "ospB":
                    add(e(i), EVEN)
                    add(-e(i), EVEN)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    for s1 in (1, -1):
                        for s2 in (1, -1):
                            add(s1 * d(i) + s2 * d(j), EVEN)
                add(2 * d(i), EVEN)
                add(-2 * d(i), EVEN)
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    for s1 in (1, -1):
                        for s2 in (1, -1):
                            add(s1 * e(i) + s2 * d(j), ODD, True)
            if f == "ospB":
                for j in range(1, n + 1):
                    add(d(j), ODD)
                    add(-d(j), ODD)
        elif f == "q":
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    if i != j:
                        add(e(i) - e(j), EVEN)
                        add(e(i) - e(j), ODD, True)
        elif f == "p":
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    if i != j:
                        add(e(i) - e(j), EVEN)
                add(2 * e(i), ODD)
                for j in range(i + 1, m + 1):
                    add(e(i) + e(j), ODD, True)
                    add(-e(i) - e(j), ODD, True)
        return tuple(sorted(out, key=lambda r: (r.weight, r.parity)))

    @cached_property
    def all_roots(self) -> frozenset[Weight]:
        return frozenset(r.weight for r in self.roots)

    @cached_property
    def even_roots(self) -> frozenset[Weight]:
        return frozenset(r.weight for r in self.roots if r.parity == EVEN)

    @cached_property
    def odd_roots(self) -> frozenset[Weight]:
        return frozenset(r.weight for r in self.roots if r.parity == ODD)

    @cached_property
    def iso_roots(self) -> frozenset[Weight]:
        return frozenset(r.weight for r in self.roots if r.isotropic)

    def is_isotropic(self, w: Weight) -> bool:
        return w in self.iso_roots

    def parity(self, w: Weight) -> str:
        """Parity of a root; q roots are reported even (they carry both)."""
        if w in self.even_roots:
            return EVEN
        if w in self.odd_roots:
            return ODD
        raise ValueError(f"{w} is not a root of {self.name}")

    @cached_property
    def pi(self) -> tuple[Weight, ...]:
        """Simple roots of the even part."""
        e, d = self.e, self.d
        m, n = self.m, self.n
        out = []
        if self.family in ("gl", "sl", "q", "p"):
            out += [e(i) - e(i + 1) for i in range(1, m)]
            out += [d(j) - d(j + 1) for j in range(1, n)]
        else:
            out += [e(i) - e(i + 1) for i in range(1, m)]
            if self.family == "ospB" and m >= 1:
                out.append(e(m))
            if self.family == "ospD" and m >= 2:
                out.append(e(m - 1) + e(m))
            out += [d(j) - d(j + 1) for j in range(1, n)]
            if n >= 1:
                out.append(2 * d(n))
        return tuple(self.normalize(w) for w in out)

    @cached_property
    def even_positive_roots(self) -> frozenset[Weight]:
        if not self.pi:
            return frozenset()
        solver = CoordinateSolver([w.coords for w in self.pi])
        out = set()
        for r in self.even_roots:
            c = solver.coords(r.coords)
            if c is not None and all(x >= 0 for x in c):
                out.add(r)
        return frozenset(out)

    # -- pairings ------------------------------------------------------------
    def form(self, mu: Weight, nu: Weight) -> Fraction:
        """The invariant form: ``(ε_i|ε_j) = δ_ij``, ``(δ_i|δ_j) = -δ_ij``."""
        if not self.is_kac_moody:
            raise ValueError(f"form unavailable for {self.name}")
        a = sum((x * y for x, y in zip(mu.eps, nu.eps)), 0)
        b = sum((x * y for x, y in zip(mu.delta, nu.delta)), 0)
        return q(a - b)

    def coroot_pairing(self, lam: Weight, alpha: Weight) -> Fraction:
        """``<λ, α^∨>`` for an even root α.

        Even roots are supported on ε's alone or δ's alone, so the Euclidean
        form gives the coroot in every family.
        """
        return q(Fraction(2 * euclid(lam, alpha)) / euclid(alpha, alpha))

    def reflect(self, alpha: Weight, lam: Weight) -> Weight:
        c = self.coroot_pairing(lam, alpha)
        return lam - alpha * c if c else lam

    @cached_property
    def weyl_order(self) -> int:
        m, n, f = self.m, self.n, self.family
        fact = math.factorial
        if f in ("gl", "sl"):
            return fact(m) * fact(n)
        if f in ("q", "p"):
            return fact(m)
        cn = 2 ** n * fact(n)
        if f == "ospB":
            return 2 ** m * fact(m) * cn
        return (2 ** (m - 1) * fact(m) if m >= 1 else 1) * cn

    @cached_property
    def longest_word(self) -> tuple[Weight, ...]:
        """Reduced word of the longest Weyl element, as simple roots applied left to right."""
        rho = self.zero
        for a in self.even_positive_roots:
            rho = rho + a
        rho = rho * Fraction(1, 2)
        word = []
        x = rho
        while True:
            a = next((a for a in self.pi if self.coroot_pairing(x, a) > 0), None)
            if a is None:
                return tuple(word)
            x = self.reflect(a, x)
            word.append(a)

    def w0(self, lam: Weight) -> Weight:
        for a in self.longest_word:
            lam = self.reflect(a, lam)
        return lam


def build_root_datum(family: str, m: int, n: int | None = None) -> RootDatum:
    """Validate parameters and return the (cached) datum.

    For ``q`` and ``p`` a single rank may be given, either as ``m`` or as
    ``n`` with the other zero; the datum then has ``rank`` ε coordinates.
    """
    if family not in FAMILIES:
        raise ValueError(f"unsupported family {family!r}; expected one of {FAMILIES}")
    if family in ("q", "p"):
        if n is None:
            n = 0
        if m and n:
            raise ValueError(f"{family} takes a single rank")
        rank = m or n
        if rank < 1:
            raise ValueError(f"{family}_n needs n >= 1")
        return _cached(family, rank, 0)
    if n is None:
        raise ValueError(f"{family} needs both m and n")
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if family == "gl" and m + n < 1:
        raise ValueError("gl(0|0) is not supported")
    if family == "sl":
        if m == n:
            raise ValueError("sl(n|n) is not supported (use gl)")
        if m + n < 2:
            raise ValueError("sl needs m + n >= 2")
    if family == "ospD" and m < 1:
        raise ValueError("osp(2m|2n) needs m >= 1")
    if family == "ospB" and m + n < 1:
        raise ValueError("osp(1|0) is not supported")
    return _cached(family, m, n)


@lru_cache(maxsize=None)
def _cached(family: str, m: int, n: int) -> RootDatum:
    return RootDatum(family, m, n)


def bilinear_form(datum: RootDatum, mu: Weight, nu: Weight) -> Fraction:
    return datum.form(mu, nu)


def pair_hbeta(datum: RootDatum, nu: Weight, beta: Weight) -> Fraction:
    """A rational vanishing exactly when ``<ν, h_β> = 0``.

    Kac-Moody families use ``(ν|β)``. For q_n and β = ε_i - ε_j the value is
    ``ν_i + ν_j``; for p_n and β = ±(ε_i + ε_j), i < j, it is ``ν_i - ν_j``.
    """
    if beta not in datum.iso_roots:
        raise ValueError(f"{beta} is not an isotropic root of {datum.name}")
    if datum.is_kac_moody:
        return datum.form(nu, beta)
    idx = [k for k, c in enumerate(beta.eps) if c != 0]
    i, j = idx
    if datum.family == "q":
        return q(nu.eps[i] + nu.eps[j])
    return q(nu.eps[i] - nu.eps[j])


def simple_reflection(datum: RootDatum, alpha: Weight, lam: Weight) -> Weight:
    if alpha not in datum.pi:
        raise ValueError(f"{alpha} is not a simple even root of {datum.name}")
    return datum.reflect(alpha, lam)


def weyl_orbit(datum: RootDatum, lam: Weight) -> list[Weight]:
    """The W-orbit of ``lam``, sorted."""
    seen = {lam}
    todo = deque([lam])
    while todo:
        x = todo.popleft()
        for a in datum.pi:
            y = datum.reflect(a, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


def dominant_representative(datum: RootDatum, lam: Weight) -> Weight:
    """The unique weight in ``W lam`` with ``<μ, α^∨> >= 0`` for all α in π."""
    x = lam
    while True:
        a = next((a for a in datum.pi if datum.coroot_pairing(x, a) < 0), None)
        if a is None:
            return x
        x = datum.reflect(a, x)


def in_weight_lattice(datum: RootDatum, lam: Weight) -> bool:
    """Membership in P_0: ``<λ, α^∨>`` is an integer for every α in π."""
    return all(isinstance(datum.coroot_pairing(lam, a), int) for a in datum.pi)


def leq(datum: RootDatum, base, nu: Weight, lam: Weight) -> bool:
    """``ν <= λ`` in the order defined by ``base``: λ - ν lies in ℕΣ."""
    c = base.coordinates(lam - nu)
    return c is not None and all(isinstance(x, int) and x >= 0 for x in c)


def iso_transversal(datum: RootDatum) -> list[Weight]:
    """One isotropic root from each orbit of W x {±1} on Δ_iso."""
    left = set(datum.iso_roots)
    reps = []
    while left:
        b = min(left)
        reps.append(b)
        orbit = set(weyl_orbit(datum, b))
        orbit |= {-x for x in orbit}
        left -= orbit
    return reps


def as_weights(datum: RootDatum, items: Iterable) -> list[Weight]:
    return [datum.normalize(w) for w in items]
