"""Acceptance criteria as runnable checks.

Each ``criterion_k`` returns a :class:`Result`. Randomized criteria draw from
``random.Random(seed)``; the seed defaults to ``SUPERCHAR_SEED`` or 0.
"""

from __future__ import annotations

import itertools
import math
import os
import random
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .base_forest import (
    base_from_word,
    check_pr1,
    default_base,
    enumerate_bases,
    odd_reflect,
    pr3_counts,
    satisfies_coro_hypothesis,
)
from .dominance import enumerate_Y, is_dominant_integrable, is_dominant_integrable_closed, is_dominant_pi, y_polytope
from .root_datum import RootDatum, Weight, build_root_datum, leq, pair_hbeta
from .short_basis import compute_b, decompose, verify_axioms
from .xi_ring import (
    XI,
    RingElement,
    XiCoeff,
    ev_condition,
    gl11_character,
    in_A,
    in_A_psi,
    in_R,
    iota,
    str_split,
    sv_condition,
    symmetrize,
)


def default_seed() -> int:
    return int(os.environ.get("SUPERCHAR_SEED", "0"))


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.2f}s) {self.detail}".rstrip()


def _box(datum: RootDatum, r: int):
    k = datum.m + datum.n
    for c in itertools.product(range(-r, r + 1), repeat=k):
        yield datum.normalize(datum.weight(c[: datum.m], c[datum.m:]))


def _mono(datum, w, c=1) -> RingElement:
    return RingElement.monomial(datum, w, c)


# -- 1 --------------------------------------------------------------------------

def _random_gl11(rng: random.Random, g: RootDatum) -> RingElement:
    def char():
        lam = g.weight((rng.randint(-3, 3),), (rng.randint(-3, 3),))
        c = gl11_character(g, lam)
        return c * rng.choice([XiCoeff(1), XiCoeff(-1), XI, XiCoeff(2, 1)])

    x = char()
    for _ in range(rng.randint(0, 3)):
        x = x * char() if rng.random() < 0.5 else x + char()
    return x


def criterion_1(seed: int | None = None, samples: int = 200) -> Result:
    rng = random.Random(default_seed() if seed is None else seed)
    g = build_root_datum("gl", 1, 1)
    beta = g.e(1) - g.d(1)
    fails = []
    done = 0
    while done < samples:
        x = _random_gl11(rng, g)
        charged = [w for w in x.support() if pair_hbeta(g, w, beta) != 0]
        if not charged:
            continue
        done += 1
        if not in_A(g, x):
            fails.append(f"character combination rejected: {x}")
            continue
        w = rng.choice(charged)
        flipped = RingElement(g, {**x.terms, w: -x.terms[w]})
        if in_A(g, flipped):
            fails.append(f"flip at {w} still accepted: {flipped}")
    return Result(1, "gl(1|1) characters lie in A; single flips leave A", not fails, f"{samples} samples", failures=fails)


# -- 2 --------------------------------------------------------------------------

def criterion_2(box: int = 3) -> Result:
    d = build_root_datum("gl", 2, 1)
    b = default_base(d)
    fails = []
    r = compute_b(d, b, d.e(1))
    expected = _mono(d, d.e(1)) + _mono(d, d.e(2)) + _mono(d, d.d(1), XI)
    if r.element != expected or r.solution_dim != 0:
        fails.append(f"b_ε1 = {r.element}, solution_dim {r.solution_dim}")
    if not verify_axioms(d, b, r.element, d.e(1)):
        fails.append("axioms fail for b_ε1")
    count = 0
    for lam in _box(d, box):
        if not is_dominant_integrable(d, b, lam):
            continue
        count += 1
        s = compute_b(d, b, lam)
        if s.solution_dim != 0 or not s.integral:
            fails.append(f"λ={lam}: solution_dim {s.solution_dim}, integral {s.integral}")
    return Result(2, "short basis on gl(2|1) mixed base", not fails, f"{count} weights solved", failures=fails)


# -- 3 --------------------------------------------------------------------------

def criterion_3() -> Result:
    fails = []
    for (m, n), want in (((2, 1), 3), ((2, 2), 6), ((1, 1), 2)):
        d = build_root_datum("gl", m, n)
        bases = enumerate_bases(d, default_base(d))
        if len(bases) != want:
            fails.append(f"{d.name}: {len(bases)} bases, expected {want}")
        words = set()
        for base in bases:
            w = base.word
            if w is None or base_from_word(d, w) != base:
                fails.append(f"{d.name}: {base} has no matching word")
            words.add(w)
            for beta in base.iso_subset:
                r = odd_reflect(d, base, beta)
                if r.positive_roots != (base.positive_roots - {beta}) | {-beta}:
                    fails.append(f"{d.name}: Δ⁺ identity fails at {beta}")
                if odd_reflect(d, r, -beta) != base:
                    fails.append(f"{d.name}: reflection at {beta} is not involutive")
        if len(words) != len(bases):
            fails.append(f"{d.name}: words are not distinct")
    return Result(3, "base enumeration and odd reflections", not fails, failures=fails)


# -- 4 --------------------------------------------------------------------------

def criterion_4(box: int = 4) -> Result:
    fails = []
    notes = []
    cases = [
        ("gl", 2, 1, None),
        ("ospB", 1, 1, None),
        ("gl", 2, 2, None),
    ]
    for fam, m, n, word in cases:
        d = build_root_datum(fam, m, n)
        b = default_base(d) if word is None else base_from_word(d, word)
        hyp = satisfies_coro_hypothesis(d, b)
        bad = []
        for lam in _box(d, box):
            g = is_dominant_integrable(d, b, lam)
            c = is_dominant_integrable_closed(d, b, lam, check=False)
            if g != c:
                bad.append((lam, g, c))
        notes.append(f"{d.name} {b.word}: {len(bad)} mismatches{'' if hyp else ' (hypothesis fails)'}")
        if bad:
            lam, g, c = bad[0]
            fails.append(f"{d.name} {b.word}: general={g}, closed={c} at λ={lam}; {len(bad)} mismatches in total")
    return Result(4, "general and closed-form dominance agree", not fails, "; ".join(notes), failures=fails)


# -- 5 --------------------------------------------------------------------------

def criterion_5(box: int = 3) -> Result:
    d = build_root_datum("q", 2)
    b = default_base(d)
    fails = []
    if is_dominant_integrable(d, b, d.weight((1, 1))):
        fails.append("(1,1) accepted")
    if not is_dominant_integrable(d, b, d.weight((2, 1))):
        fails.append("(2,1) rejected")
    count = 0
    for lam in _box(d, box):
        if lam.is_zero() or not is_dominant_integrable(d, b, lam):
            continue
        count += 1
        s = compute_b(d, b, lam)
        if s.solution_dim or not s.integral:
            fails.append(f"λ={lam}: solution_dim {s.solution_dim}, integral {s.integral}")
        if s.element.psi("-"):
            fails.append(f"ψ₋(b_λ) ≠ 0 for λ={lam}")
        if not in_R(d, s.element):
            fails.append(f"b_λ not in R(P₀) for λ={lam}")
    return Result(5, "q(2) dominance and short basis", not fails, f"{count} weights", failures=fails)


# -- 6 --------------------------------------------------------------------------

def _random_symmetric(rng: random.Random, d: RootDatum, pool: list[RingElement]) -> RingElement:
    """Either a ℤ-combination of ψ₋ images of short-basis elements or a random symmetrized element."""
    if rng.random() < 0.5:
        x = RingElement.zero(d)
        for _ in range(rng.randint(1, 3)):
            x = x + rng.choice(pool) * rng.choice([1, -1, 2, -3])
        return x.psi("-")
    x = RingElement.zero(d)
    for _ in range(rng.randint(1, 4)):
        w = d.weight((rng.randint(-2, 2), rng.randint(-2, 2)), (rng.randint(-2, 2),))
        x = x + _mono(d, w, rng.choice([1, -1, 2]))
    return symmetrize(x)


def criterion_6(seed: int | None = None, samples: int = 200) -> Result:
    rng = random.Random(default_seed() if seed is None else seed)
    d = build_root_datum("gl", 2, 1)
    b = default_base(d)
    beta, omega = d.e(1) - d.d(1), d.e(1)
    pool = [compute_b(d, b, lam).element for lam in _box(d, 2) if is_dominant_integrable(d, b, lam)]
    fails = []
    accepted = 0
    for _ in range(samples):
        f = _random_symmetric(rng, d, pool)
        a = in_A_psi(d, f, "-", lattice="int")
        s = sv_condition(d, f, beta, omega, "-")
        e = ev_condition(d, f, beta, omega, "-")
        accepted += a
        if not (a == s == e):
            fails.append(f"in_A₋={a}, sv={s}, ev={e} for {f}")
        g = iota(d, f)
        if in_A_psi(d, g, "+", lattice="int") != a:
            fails.append(f"ι does not carry A₋ to A₊ at {f}")
        if in_A_psi(d, f, "+", lattice="int") != in_A_psi(d, g, "-", lattice="int"):
            fails.append(f"ι does not carry A₊ to A₋ at {f}")
    return Result(6, "A₋ ⟺ divisibility ⟺ evaluation; ι(A₋) = A₊", not fails,
                  f"{accepted}/{samples} accepted", failures=fails)


# -- 7 --------------------------------------------------------------------------

def criterion_7(seed: int | None = None, pairs: int = 50, box: int = 1) -> Result:
    rng = random.Random(default_seed() if seed is None else seed)
    fails = []
    for m, n in ((2, 1), (2, 2)):
        d = build_root_datum("gl", m, n)
        b = default_base(d)
        lams = [lam for lam in _box(d, box) if is_dominant_integrable(d, b, lam)]
        cache: dict = {}
        for _ in range(pairs):
            l1, l2 = rng.choice(lams), rng.choice(lams)
            for lam in (l1, l2):
                if lam not in cache:
                    cache[lam] = compute_b(d, b, lam)
            x = cache[l1].element * cache[l2].element
            dec = decompose(d, b, x, cache=cache)
            if dec.remainder:
                fails.append(f"{d.name}: b_{l1}·b_{l2} leaves remainder {dec.remainder}")
            if not all(c.is_integral() for c in dec.coefficients.values()):
                fails.append(f"{d.name}: non-integral coefficients for b_{l1}·b_{l2}")
    return Result(7, "products of short-basis elements decompose exactly", not fails,
                  f"{pairs} pairs per algebra", failures=fails)


# -- 8 --------------------------------------------------------------------------

def brute_force_Y(datum: RootDatum, base, lam: Weight) -> set[Weight]:
    """Y_λ by breadth-first subtraction of simple roots, depth capped by a float LP bound."""
    import numpy as np
    from scipy.optimize import linprog

    rows = y_polytope(datum, base, lam)
    k = len(base.sigma)
    # rows read coeffs·x + const ≥ 0; linprog wants A_ub x ≤ b_ub
    a_ub = [[-float(c) for c in coeffs] for coeffs, _ in rows]
    b_ub = [float(const) for _, const in rows]
    res = linprog(-np.ones(k), A_ub=a_ub, b_ub=b_ub, bounds=[(0, None)] * k, method="highs")
    if res.status == 2:
        # empty polytope: nothing below λ is dominant
        return set()
    if res.status != 0:
        raise ValueError(f"LP bound unavailable: {res.message}")
    cap = math.floor(-res.fun + 1e-7)
    seen = {lam: 0}
    todo = deque([lam])
    out = set()
    while todo:
        x = todo.popleft()
        depth = seen[x]
        if x != lam and is_dominant_pi(datum, x):
            out.add(x)
        if depth == cap:
            continue
        for s in base.sigma:
            y = datum.normalize(x - s)
            if y not in seen:
                seen[y] = depth + 1
                todo.append(y)
    return out


def criterion_8(box: int = 3) -> Result:
    fails = []
    for fam, m, n in (("gl", 2, 1), ("gl", 3, 2), ("ospB", 1, 1), ("ospD", 2, 1)):
        d = build_root_datum(fam, m, n)
        b = default_base(d)
        lhs, rhs = pr3_counts(d, b)
        if lhs != rhs:
            fails.append(f"(Pr3) fails on {d.name}: {lhs} != {rhs}")
    words_checked = 0
    for m, n in ((2, 1), (1, 2), (3, 1), (3, 2), (2, 3)):
        d = build_root_datum("gl", m, n)
        for base in enumerate_bases(d, default_base(d)):
            w = base.word
            if w[0] == w[-1]:
                words_checked += 1
                if not check_pr1(d, base, fast=False):
                    fails.append(f"(Pr1) fails for {d.name} word {w}")
    for r in (2, 3):
        d = build_root_datum("q", r)
        if not check_pr1(d, default_base(d), fast=False):
            fails.append(f"(Pr1) fails for {d.name}")
    d = build_root_datum("gl", 2, 1)
    b = default_base(d)
    for lam in _box(d, box):
        got = set(enumerate_Y(d, b, lam))
        want = brute_force_Y(d, b, lam)
        if got != want:
            fails.append(f"Y_{lam}: {sorted(map(str, got))} vs oracle {sorted(map(str, want))}")
    return Result(8, "(Pr3), (Pr1) and Y_λ against oracles", not fails,
                  f"{words_checked} same-letter words", failures=fails)


# -- 9 --------------------------------------------------------------------------

def _p_generators(d: RootDatum) -> list[RingElement]:
    beta = d.e(1) + d.e(2)
    gens = []
    for a in range(-2, 3):
        for c in range(-2, 3):
            nu = d.weight((a, c))
            if pair_hbeta(d, nu, beta) == 0:
                gens.append(symmetrize(_mono(d, nu)))
            else:
                gens.append(symmetrize(_mono(d, nu) + _mono(d, nu - beta, XI)))
    return gens


def criterion_9(seed: int | None = None, samples: int = 100) -> Result:
    from fractions import Fraction

    rng = random.Random(default_seed() if seed is None else seed)
    d = build_root_datum("p", 2)
    st = d.weight((1, 1))
    gens = _p_generators(d)
    fails = []
    accepted = 0
    for _ in range(samples):
        x = RingElement.zero(d)
        for c in rng.sample([Fraction(0), Fraction(1, 2), Fraction(1, 3)], rng.randint(1, 3)):
            part = rng.choice(gens) * rng.choice(gens) if rng.random() < 0.5 else rng.choice(gens)
            if rng.random() < 0.4:
                part = part + _mono(d, d.weight((rng.randint(-2, 2), rng.randint(-2, 2))))
            x = x + part.map_weights(lambda w, c=c: w + st * c)
        whole = in_A(d, x)
        parts = str_split(d, x)
        each = all(in_A(d, a) for a in parts.values())
        accepted += whole
        if whole != each:
            fails.append(f"in_A={whole} but components give {each} for {x}")
    return Result(9, "p(2) membership factors over str-cosets", not fails,
                  f"{accepted}/{samples} accepted", failures=fails)


# -- 10 -------------------------------------------------------------------------

def _defining_functional(datum: RootDatum, positive: frozenset[Weight]):
    """A rational functional positive on every positive root, found by LP."""
    from fractions import Fraction

    import numpy as np
    from scipy.optimize import linprog

    roots = sorted(positive)
    k = datum.m + datum.n
    res = linprog(np.zeros(k), A_ub=[[-float(c) for c in r.coords] for r in roots], b_ub=[-1.0] * len(roots),
                  bounds=[(None, None)] * k, method="highs")
    if res.status != 0:
        raise ValueError("no defining functional")
    f = [Fraction(v).limit_denominator(1000) for v in res.x]
    if not all(sum(a * b for a, b in zip(f, r.coords)) > 0 for r in roots):
        raise ValueError("rounded functional is not defining")
    return lambda w: sum(a * b for a, b in zip(f, w.coords))


def leq_oracle_table(datum: RootDatum, base, weights: list[Weight]) -> dict:
    """``{ν: set of λ in weights with ν ≤ λ}`` by adding positive roots breadth first."""
    pos = base.positive_roots
    f = _defining_functional(datum, pos)
    top = max(f(w) for w in weights)
    targets = set(weights)
    table = {}
    for nu in weights:
        seen = {nu}
        todo = deque([nu])
        while todo:
            x = todo.popleft()
            for a in pos:
                y = datum.normalize(x + a)
                if y not in seen and f(y) <= top:
                    seen.add(y)
                    todo.append(y)
        table[nu] = seen & targets
    return table


def criterion_10(box: int = 3) -> Result:
    fails = []
    for fam, m, n in (("gl", 2, 1), ("q", 2, 0), ("p", 2, 0)):
        d = build_root_datum(fam, m, n)
        b = default_base(d)
        weights = sorted(set(_box(d, box)))
        table = leq_oracle_table(d, b, weights)
        bad = 0
        for nu in weights:
            for lam in weights:
                if leq(d, b, nu, lam) != (lam in table[nu]):
                    bad += 1
                    if bad <= 3:
                        fails.append(f"{d.name}: leq({nu}, {lam}) disagrees with the oracle")
    return Result(10, "leq against breadth-first oracle", not fails, failures=fails)


CRITERIA: dict[int, Callable[[], Result]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run(number: int) -> Result:
    t = time.perf_counter()
    try:
        r = CRITERIA[number]()
    except Exception as exc:  # a crash is a failure, reported like any other
        r = Result(number, "crashed", False, f"{type(exc).__name__}: {exc}")
    r.seconds = time.perf_counter() - t
    return r


def run_all(numbers=None) -> list[Result]:
    return [run(k) for k in (numbers or sorted(CRITERIA))]
