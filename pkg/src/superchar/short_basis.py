"""Short-basis elements b_λ, their axioms, and decomposition in that basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from ._linalg import solve
from .base_forest import Base, check_pr1
from .dominance import Unsupported, enumerate_Y, is_dominant_integrable, is_dominant_pi
from .root_datum import RootDatum, Weight, dominant_representative, iso_transversal, leq, pair_hbeta, weyl_orbit
from .xi_ring import (
    RingElement,
    XiCoeff,
    _line_key,
    ch_xi_C_coeff,
    explain_A,
    in_R,
    sdim_C_is_zero,
)


class HypothesisViolation(ArithmeticError):
    """The linear system for b_λ has no solution, although one should exist."""


@dataclass(frozen=True)
class ShortBasisElement:
    lam: Weight
    element: RingElement
    solution_dim: int
    integral: bool
    orbit_coefficients: dict = field(default_factory=dict, compare=False)

    @property
    def unique(self) -> bool:
        return self.solution_dim == 0


def _refuse(datum: RootDatum, base: Base) -> None:
    if datum.family == "p":
        raise Unsupported("short bases are not constructed for p_n")
    if (datum.family, datum.m, datum.n) == ("gl", 1, 1):
        raise ValueError("gl(1|1) admits no short basis")
    if not check_pr1(datum, base):
        raise ValueError(f"{base} fails (Pr1); the sets Y_λ need not be finite")


def _string_lines(datum: RootDatum, reps: list[Weight], support: list[Weight]) -> list[list[tuple[int, int]]]:
    """Charged β-lines through the support, as ``(i, orbit index)`` lists.

    The unknowns are W-invariant, so one β per W × {±1} orbit suffices.
    """
    index = {r: k for k, r in enumerate(reps)}
    rep_of = {v: index[dominant_representative(datum, v)] for v in support}
    out = []
    for beta in iso_transversal(datum):
        lines: dict = {}
        for v in support:
            key, i = _line_key(v, beta)
            lines.setdefault(key, []).append((i, rep_of[v]))
        out += [items for key, items in lines.items() if pair_hbeta(datum, key, beta) != 0]
    return out


def _string_rows(lines, k: int, sign: int) -> list[list]:
    """Rows of ``Σ_i (-s)^i u_{rep(ν + iβ)} = 0``."""
    rows = set()
    for items in lines:
        row = [0] * k
        for i, j in items:
            row[j] += (-sign) ** (i % 2)
        if any(row):
            rows.add(tuple(row))
    return [list(r) for r in sorted(rows)]


def _solve_level(datum, base, lam, reps, lines, sign):
    """Solve for ``ψ_sign`` of the orbit coefficients."""
    k = len(reps)
    a, b = [], []
    top = ch_xi_C_coeff(datum, lam).psi(sign)
    a.append([int(j == 0) for j in range(k)])
    b.append(top)
    for j, mu in enumerate(reps[1:], 1):
        pattern = ch_xi_C_coeff(datum, mu).psi(sign)
        if pattern == 0 or is_dominant_integrable(datum, base, mu):
            a.append([int(t == j) for t in range(k)])
            b.append(0)
    for row in _string_rows(lines, k, sign):
        a.append(row)
        b.append(0)
    return solve(a, b)


def compute_b(datum: RootDatum, base: Base, lam: Weight) -> ShortBasisElement:
    """The short-basis element ``b_λ`` with respect to ``base``.

    Unknowns are the coefficients on W-orbits of ``{λ} ∪ Y_λ``. They are fixed
    by the top coefficient, vanishing at dominant-integrable weights below λ,
    and every isotropic string condition, solved separately under ψ₊ and ψ₋.
    """
    _refuse(datum, base)
    lam = datum.normalize(lam)
    if not is_dominant_integrable(datum, base, lam):
        raise ValueError(f"{lam} is not dominant integrable for {base}")
    reps = [lam] + enumerate_Y(datum, base, lam)
    support = sorted({v for mu in reps for v in weyl_orbit(datum, mu)})
    lines = _string_lines(datum, reps, support)
    sols, dims = {}, 0
    for sign in (1, -1):
        x, nullity = _solve_level(datum, base, lam, reps, lines, sign)
        if x is None:
            raise HypothesisViolation(f"no solution at level ψ{'+' if sign > 0 else '-'} for λ={lam}")
        sols[sign] = x
        dims += nullity
    coeffs = {mu: XiCoeff.from_psi(p, m) for mu, p, m in zip(reps, sols[1], sols[-1])}
    elem = RingElement(datum, [(v, coeffs[dominant_representative(datum, v)]) for v in support])
    integral = elem.is_integral() and in_R(datum, elem)
    return ShortBasisElement(lam, elem, dims, integral, {mu: c for mu, c in coeffs.items() if c})


def orbit_sum_b(datum: RootDatum, lam: Weight) -> RingElement:
    """``Σ_{ν ∈ Wλ} e^ν`` (times the ``ch_ξ C_λ`` coefficient) when there are no isotropic roots."""
    if datum.iso_roots:
        raise ValueError(f"{datum.name} has isotropic roots")
    lam = datum.normalize(lam)
    if not is_dominant_pi(datum, lam):
        raise ValueError(f"{lam} is not dominant")
    c = ch_xi_C_coeff(datum, lam)
    return RingElement(datum, [(v, c) for v in weyl_orbit(datum, lam)])


@dataclass(frozen=True)
class AxiomReport:
    top: bool
    b: bool
    c: bool
    d: bool
    in_A: bool
    notes: tuple = ()

    @property
    def ok(self) -> bool:
        return self.top and self.b and self.c and self.d and self.in_A

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        return {"top": self.top, "b": self.b, "c": self.c, "d": self.d, "in_A": self.in_A, "ok": self.ok}


def verify_axioms(datum: RootDatum, base: Base, candidate: RingElement, lam: Weight) -> AxiomReport:
    """Check a candidate ``b_λ`` against the short-basis axioms one by one."""
    lam = datum.normalize(lam)
    notes = []
    top = candidate.coeff(lam) == ch_xi_C_coeff(datum, lam)
    if not top:
        notes.append(f"coefficient at λ is {candidate.coeff(lam)}")
    others = [v for v in candidate.support() if v != lam and is_dominant_integrable(datum, base, v)]
    if others:
        notes.append(f"dominant integrable weights in support: {', '.join(map(str, others))}")
    c_ok = True
    if sdim_C_is_zero(datum, lam):
        c_ok = candidate * XiCoeff(0, 1) == candidate
    above = [v for v in candidate.support() if not leq(datum, base, v, lam)]
    if above:
        notes.append(f"support not below λ: {', '.join(map(str, above))}")
    verdict = explain_A(datum, candidate)
    if not verdict:
        notes.append(verdict.reason)
    return AxiomReport(top, top and not others, c_ok, not above, verdict.holds, tuple(notes))


@dataclass
class Decomposition:
    coefficients: dict
    remainder: RingElement

    @property
    def exact(self) -> bool:
        return not self.remainder


def _maximal(datum: RootDatum, base: Base, weights: list[Weight]) -> Weight:
    tops = [w for w in weights if not any(v != w and leq(datum, base, w, v) for v in weights)]
    return max(tops)


def decompose(datum: RootDatum, base: Base, x: RingElement, cache: dict | None = None, max_steps: int = 10_000) -> Decomposition:
    """Write ``x = Σ n_λ b_λ`` by repeatedly clearing a maximal dominant-integrable weight.

    A nonzero remainder means the remainder lies in A(g) yet has no
    dominant-integrable weight in its support, which should not happen
    on a base satisfying (Pr1).
    """
    verdict = explain_A(datum, x)
    if not verdict:
        raise ValueError(f"element is not in A(g): {verdict.reason}")
    cache = {} if cache is None else cache
    coeffs: dict[Weight, XiCoeff] = {}
    for _ in range(max_steps):
        tops = [w for w in x.support() if is_dominant_integrable(datum, base, w)]
        if not tops:
            break
        lam = _maximal(datum, base, tops)
        n = x.coeff(lam).divided_by(ch_xi_C_coeff(datum, lam))
        if n is None:
            raise ValueError(f"coefficient {x.coeff(lam)} at {lam} is not a ℤ[ξ]-multiple of ch_ξ C_λ")
        if lam not in cache:
            cache[lam] = compute_b(datum, base, lam)
        x = x - cache[lam].element * n
        coeffs[lam] = coeffs.get(lam, XiCoeff()) + n
    else:
        raise RuntimeError("decomposition did not terminate")
    return Decomposition({k: v for k, v in sorted(coeffs.items()) if v}, x)


__all__ = [
    "HypothesisViolation",
    "ShortBasisElement",
    "compute_b",
    "orbit_sum_b",
    "AxiomReport",
    "verify_axioms",
    "Decomposition",
    "decompose",
]
