"""Sparse arithmetic in ℤ[P₀; ξ] and the membership tests for A(g).

Coefficients are pairs ``a + bξ`` with ξ² = 1. The evaluations
``ψ± : ξ ↦ ±1`` diagonalize the coefficient ring, which is how the solver
in :mod:`superchar.short_basis` avoids zero divisors.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from ._linalg import q
from .root_datum import RootDatum, Weight, euclid, in_weight_lattice, iso_transversal, pair_hbeta


@dataclass(frozen=True, slots=True)
class XiCoeff:
    """``a + bξ``."""

    a: int | Fraction = 0
    b: int | Fraction = 0

    def __post_init__(self):
        object.__setattr__(self, "a", q(self.a))
        object.__setattr__(self, "b", q(self.b))

    @classmethod
    def of(cls, x) -> "XiCoeff":
        if isinstance(x, XiCoeff):
            return x
        if isinstance(x, (tuple, list)):
            return cls(*x)
        return cls(x, 0)

    def __add__(self, o) -> "XiCoeff":
        o = XiCoeff.of(o)
        return XiCoeff(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o) -> "XiCoeff":
        o = XiCoeff.of(o)
        return XiCoeff(self.a - o.a, self.b - o.b)

    def __neg__(self) -> "XiCoeff":
        return XiCoeff(-self.a, -self.b)

    def __mul__(self, o) -> "XiCoeff":
        o = XiCoeff.of(o)
        return XiCoeff(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def psi(self, sign: str) -> int | Fraction:
        return q(self.a + self.b) if _sign(sign) > 0 else q(self.a - self.b)

    @classmethod
    def from_psi(cls, plus, minus) -> "XiCoeff":
        return cls(Fraction(plus + minus) / 2, Fraction(plus - minus) / 2)

    def is_integral(self) -> bool:
        return isinstance(self.a, int) and isinstance(self.b, int)

    def divided_by(self, d: "XiCoeff") -> "XiCoeff | None":
        """Some ``c`` in ℤ[ξ] with ``c·d = self``, or ``None``."""
        dp, dm = d.psi("+"), d.psi("-")
        sp, sm = self.psi("+"), self.psi("-")
        parts = []
        for s, t in ((sp, dp), (sm, dm)):
            if t == 0:
                if s != 0:
                    return None
                parts.append(None)
            else:
                parts.append(Fraction(s) / t)
        p, m = parts
        # a zero ψ-component of d leaves that component of c free; pick the
        # value making c integral
        if p is None and m is None:
            return XiCoeff() if not self else None
        if p is None:
            p = m if isinstance(q(m), int) else None
        if m is None:
            m = p if isinstance(q(p), int) else None
        if p is None or m is None:
            return None
        c = XiCoeff.from_psi(p, m)
        if not c.is_integral():
            return None
        return c

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return "ξ" if self.b == 1 else ("-ξ" if self.b == -1 else f"{self.b}ξ")
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        return f"({self.a}{sign}{'' if mag == 1 else mag}ξ)"


ZERO = XiCoeff()
ONE = XiCoeff(1, 0)
XI = XiCoeff(0, 1)


def _sign(sign) -> int:
    if sign in ("+", 1, "plus"):
        return 1
    if sign in ("-", "−", -1, "minus"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


class RingElement:
    """A finite sum ``Σ m_ν e^ν`` with ``m_ν ∈ ℤ[ξ]``."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: Mapping[Weight, XiCoeff] | Iterable = ()):
        acc: dict[Weight, XiCoeff] = defaultdict(XiCoeff)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[datum.normalize(w)] += XiCoeff.of(c)
        self.datum = datum
        self.terms = {w: acc[w] for w in sorted(acc) if acc[w]}

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, datum: RootDatum) -> "RingElement":
        return cls(datum)

    @classmethod
    def one(cls, datum: RootDatum) -> "RingElement":
        return cls(datum, {datum.zero: ONE})

    @classmethod
    def monomial(cls, datum: RootDatum, w: Weight, c=1) -> "RingElement":
        return cls(datum, {w: XiCoeff.of(c)})

    # -- basic protocol --------------------------------------------------
    def support(self) -> list[Weight]:
        return list(self.terms)

    def coeff(self, w: Weight) -> XiCoeff:
        return self.terms.get(self.datum.normalize(w), ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, XiCoeff)):
            other = RingElement(self.datum, {self.datum.zero: XiCoeff.of(other)})
        return isinstance(other, RingElement) and self.datum == other.datum and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.datum, tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"RingElement({self.datum.name}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            mono = "" if w.is_zero() else f"e^({w})"
            if c == ONE and mono:
                parts.append(mono)
            elif c == -ONE and mono:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{'·' if mono else ''}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "RingElement") -> None:
        if other.datum != self.datum:
            raise ValueError(f"datum mismatch: {self.datum.name} vs {other.datum.name}")

    def _lift(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            self._check(other)
            return other
        return RingElement(self.datum, {self.datum.zero: XiCoeff.of(other)})

    def __add__(self, other) -> "RingElement":
        other = self._lift(other)
        return RingElement(self.datum, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.datum, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "RingElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RingElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "RingElement":
        if not isinstance(other, RingElement):
            c = XiCoeff.of(other)
            return RingElement(self.datum, {w: c * x for w, x in self.terms.items()})
        self._check(other)
        out = []
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.append((w1 + w2, c1 * c2))
        return RingElement(self.datum, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        out = RingElement.one(self.datum)
        for _ in range(k):
            out = out * self
        return out

    def psi(self, sign) -> "RingElement":
        """``ξ ↦ ±1``, giving an element with integer (ξ-free) coefficients."""
        return RingElement(self.datum, {w: XiCoeff(c.psi(sign)) for w, c in self.terms.items()})

    def map_weights(self, f: Callable[[Weight], Weight]) -> "RingElement":
        return RingElement(self.datum, [(f(w), c) for w, c in self.terms.items()])

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.terms.values())

    def is_xi_free(self) -> bool:
        return all(not c.b for c in self.terms.values())


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def scale_xi(x: RingElement, c) -> RingElement:
    return x * XiCoeff.of(c)


def psi(x: RingElement, sign) -> RingElement:
    return x.psi(sign)


def from_psi(plus: RingElement, minus: RingElement) -> RingElement:
    """Recover ``x`` from ``(ψ₊x, ψ₋x)``; raises unless the parity check passes."""
    plus._check(minus)
    out = {}
    for w in set(plus.terms) | set(minus.terms):
        p, m = plus.coeff(w).a, minus.coeff(w).a
        if (p - m) % 2:
            raise ValueError(f"ψ₊ and ψ₋ disagree mod 2 at {w}")
        out[w] = XiCoeff.from_psi(p, m)
    return RingElement(plus.datum, out)


# -- W-invariance and h-modules ----------------------------------------------

def is_w_invariant(x: RingElement) -> bool:
    d = x.datum
    return all(x.coeff(d.reflect(a, w)) == c for w, c in x.terms.items() for a in d.pi)


def symmetrize(x: RingElement) -> RingElement:
    """``Σ_{w ∈ W} w(x)`` over the distinct orbit points of each monomial."""
    from .root_datum import weyl_orbit

    out = []
    for w, c in x.terms.items():
        out += [(v, c) for v in weyl_orbit(x.datum, w)]
    return RingElement(x.datum, out)


def clifford_rank(datum: RootDatum, nu: Weight) -> int:
    """Number of nonzero coordinates: the rank of the Clifford algebra acting on C_ν (q only)."""
    return sum(1 for c in nu.coords if c != 0)


def ch_xi_C_coeff(datum: RootDatum, nu: Weight) -> XiCoeff:
    if datum.cartan_is_torus:
        return ONE
    z = clifford_rank(datum, nu)
    if z == 0:
        return ONE
    d = 2 ** (math.ceil(z / 2) - 1)
    return XiCoeff(d, d)


def ch_xi_C(datum: RootDatum, nu: Weight) -> RingElement:
    """ξ-character of the simple h-module of weight ν."""
    nu = datum.normalize(nu)
    return RingElement.monomial(datum, nu, ch_xi_C_coeff(datum, nu))


def sdim_C_is_zero(datum: RootDatum, nu: Weight) -> bool:
    return ch_xi_C_coeff(datum, nu).psi("-") == 0


def _lattice_test(datum: RootDatum, lattice) -> Callable[[Weight], bool]:
    if callable(lattice):
        return lattice
    if lattice in ("full", "P0", None):
        return lambda w: in_weight_lattice(datum, w)
    if lattice in ("int", "integral"):
        return lambda w: w.is_integral() and in_weight_lattice(datum, w)
    if lattice in ("half", "half-integral"):
        if datum.family != "q":
            raise ValueError("the half-integral lattice is offered for q_n only")
        return lambda w: all(isinstance(q(c - Fraction(1, 2)), int) for c in w.coords)
    raise ValueError(f"unknown lattice {lattice!r}")


def in_R(datum: RootDatum, x: RingElement, lattice="full") -> bool:
    """Support in the lattice and each ``m_ν`` a ℤ[ξ]-multiple of the ``ch_ξ C_ν`` coefficient."""
    inside = _lattice_test(datum, lattice)
    for w, c in x.terms.items():
        if not inside(w) or not c.is_integral():
            return False
        if c.divided_by(ch_xi_C_coeff(datum, w)) is None:
            return False
    return True


# -- string conditions -------------------------------------------------------

def _line_key(nu: Weight, beta: Weight) -> tuple[Weight, int]:
    """``(representative, i)`` with ``nu = representative + i β``."""
    i = math.floor(Fraction(euclid(nu, beta)) / euclid(beta, beta))
    if not i:
        return nu, 0
    m = len(nu.eps)
    c = [x - i * y for x, y in zip(nu.coords, beta.coords)]
    return Weight(c[:m], c[m:]), i


def _strings(x: RingElement, beta: Weight) -> dict[Weight, list[tuple[int, XiCoeff]]]:
    lines: dict[Weight, list] = defaultdict(list)
    for w, c in x.terms.items():
        rep, i = _line_key(w, beta)
        lines[rep].append((i, c))
    return lines


def _alternating(items, level) -> XiCoeff | int | Fraction:
    if level is None:
        # (-ξ)^i is 1 for even i and -ξ for odd i
        total = ZERO
        for i, c in items:
            total += c * XiCoeff(0, -1) if i % 2 else c
        return total
    s = _sign(level)
    # ψ_s((-ξ)^i) = (-s)^i
    return sum((c.psi(s) * (-s) ** (i % 2) for i, c in items), 0)


def string_violation(x: RingElement, beta: Weight, level=None) -> Weight | None:
    """A base point of a charged β-line whose alternating sum is nonzero."""
    d = x.datum
    beta = d.normalize(beta)
    if beta not in d.iso_roots:
        raise ValueError(f"{beta} is not an isotropic root of {d.name}")
    for rep, items in _strings(x, beta).items():
        if pair_hbeta(d, rep, beta) == 0:
            continue
        if _alternating(items, level):
            return min(rep + beta * i for i, _ in items)
    return None


def string_condition(datum: RootDatum, x: RingElement, beta: Weight, level=None) -> bool:
    """``Σ_i (-ξ)^i m_{ν+iβ} = 0`` on every line ``ν + ℤβ`` with ``<ν, h_β> ≠ 0``.

    ``level='+'`` or ``'-'`` applies ψ± first, so the sum becomes
    ``Σ (∓1)^i m_{ν+iβ}``.
    """
    if x.datum != datum:
        raise ValueError("datum mismatch")
    return string_violation(x, beta, level) is None


def _betas(datum: RootDatum, all_beta: bool) -> list[Weight]:
    return sorted(datum.iso_roots) if all_beta else iso_transversal(datum)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def explain_A(datum: RootDatum, x: RingElement, lattice="full", all_beta: bool = False, level=None) -> Verdict:
    if level is None and not in_R(datum, x, lattice):
        return Verdict(False, "not in R(P)")
    if level is not None and not all(_lattice_test(datum, lattice)(w) for w in x.terms):
        return Verdict(False, "support outside the lattice")
    for w, c in x.terms.items():
        for a in datum.pi:
            if x.coeff(datum.reflect(a, w)) != c:
                return Verdict(False, f"not W-invariant at {w} under s_({a})")
    for beta in _betas(datum, all_beta):
        bad = string_violation(x, beta, level)
        if bad is not None:
            return Verdict(False, f"string condition fails for β={beta} on the line through {bad}")
    return Verdict(True)


def in_A(datum: RootDatum, x: RingElement, lattice="full", all_beta: bool = False) -> bool:
    """Membership in A(P): in R(P), W-invariant, and every isotropic string condition."""
    return explain_A(datum, x, lattice, all_beta).holds


def in_A_psi(datum: RootDatum, x: RingElement, sign, lattice="full", all_beta: bool = False) -> bool:
    """Membership of ``ψ_sign(x)`` in A±: W-invariance and the signed string sums."""
    return explain_A(datum, x.psi(sign), lattice, all_beta, level=sign).holds


# -- alternative formulations for a single β ---------------------------------

def _transitive_check(datum: RootDatum, beta: Weight) -> None:
    if len(iso_transversal(datum)) != 1:
        raise ValueError(f"Δ_iso of {datum.name} is not a single orbit up to sign")
    if beta not in datum.iso_roots:
        raise ValueError(f"{beta} is not isotropic")


def _xy_decompose(datum: RootDatum, nu: Weight, beta: Weight, omega: Weight):
    """``ν = ν' + a ω + b β`` with ν' killed by h_β and orthogonal to β (Euclidean)."""
    a = Fraction(pair_hbeta(datum, nu, beta)) / pair_hbeta(datum, omega, beta)
    rest = nu - omega * a
    b = Fraction(euclid(rest, beta)) / euclid(beta, beta)
    return rest - beta * b, q(a), q(b)


def _psi_level(x: RingElement, sign) -> RingElement:
    return x if x.is_xi_free() else x.psi(sign)


def sv_condition(datum: RootDatum, x: RingElement, beta: Weight, omega: Weight, sign="-") -> bool:
    """``∂f/∂x`` divisible by ``y - 1`` (sign ``-``) or ``y + 1`` (sign ``+``).

    Here ``x = e^ω`` and ``y = e^β``. The element is taken at the ψ level
    of the given sign.
    """
    beta, omega = datum.normalize(beta), datum.normalize(omega)
    _transitive_check(datum, beta)
    if pair_hbeta(datum, omega, beta) == 0:
        raise ValueError("ω must pair nontrivially with h_β")
    f = _psi_level(x, sign)
    s = _sign(sign)
    # y ↦ 1 for sign '-', y ↦ -1 for sign '+'
    y = 1 if s < 0 else -1
    groups: dict = defaultdict(list)
    for w, c in f.terms.items():
        nu1, a, b = _xy_decompose(datum, w, beta, omega)
        if a == 0:
            continue
        frac_b = b - math.floor(b)
        groups[(nu1, a, frac_b)].append((b - frac_b, a * c.a))
    for items in groups.values():
        if sum(c * y ** (int(b) % 2) for b, c in items) != 0:
            return False
    return True


def ev_condition(datum: RootDatum, x: RingElement, beta: Weight, omega: Weight, sign="-") -> bool:
    """``ev_c(f)`` (``x ↦ c``, ``y ↦ ∓1``) does not depend on c.

    The default sign ``-`` works at the ψ₋ level, where the string sums are
    unsigned, so ``y ↦ 1``.
    """
    beta, omega = datum.normalize(beta), datum.normalize(omega)
    _transitive_check(datum, beta)
    if pair_hbeta(datum, omega, beta) == 0:
        raise ValueError("ω must pair nontrivially with h_β")
    f = _psi_level(x, sign)
    y = 1 if _sign(sign) < 0 else -1
    coeffs: dict = defaultdict(int)
    for w, c in f.terms.items():
        nu1, a, b = _xy_decompose(datum, w, beta, omega)
        if not (isinstance(a, int) and isinstance(b, int)):
            raise ValueError(f"support {w} is not in (t')* + ℤβ + ℤω")
        coeffs[(nu1, a)] += c.a * y ** (b % 2)
    return all(v == 0 for (nu1, a), v in coeffs.items() if a != 0)


# -- p_n and parity ------------------------------------------------------------

def str_split(datum: RootDatum, x: RingElement) -> dict:
    """``x = Σ_c e^{c·str} a_c`` with ``a_c`` integrally supported, ``c ∈ [0, 1)``."""
    if datum.family != "p":
        raise ValueError("str_split applies to p_n only")
    st = datum.weight((1,) * datum.m)
    parts: dict = defaultdict(list)
    for w, coef in x.terms.items():
        c0 = Fraction(w.eps[0])
        c = c0 - math.floor(c0)
        shifted = w - st * c
        if not shifted.is_integral():
            raise ValueError(f"{w} is not in ℚ·str + P_int")
        parts[q(c)].append((shifted, coef))
    return {c: RingElement(datum, items) for c, items in sorted(parts.items())}


def parity(datum: RootDatum, nu: Weight) -> int:
    """``p(ν)``: the sum of δ-coordinates mod 2."""
    s = sum(nu.delta, 0)
    if not isinstance(q(s), int):
        raise ValueError(f"{nu} has non-integral δ part")
    return int(s) % 2


def iota(datum: RootDatum, x: RingElement) -> RingElement:
    """``e^ν ↦ (-1)^{p(ν)} e^ν`` on integrally supported elements (gl, osp)."""
    if datum.family not in ("gl", "ospB", "ospD"):
        raise ValueError(f"no parity homomorphism on P_int for {datum.name}")
    out = {}
    for w, c in x.terms.items():
        if not w.is_integral():
            raise ValueError(f"{w} is not integral")
        out[w] = -c if parity(datum, w) else c
    return RingElement(datum, out)


def gl11_character(datum: RootDatum, lam: Weight, beta: Weight | None = None) -> RingElement:
    """ξ-character of the simple gl(1|1)-module ``L(λ)`` for the base ``{β}``."""
    if (datum.family, datum.m, datum.n) != ("gl", 1, 1):
        raise ValueError("gl11_character needs gl(1|1)")
    beta = beta if beta is not None else datum.e(1) - datum.d(1)
    top = RingElement.monomial(datum, lam)
    if datum.form(lam, beta) == 0:
        return top
    return top + RingElement.monomial(datum, lam - beta, XI)
