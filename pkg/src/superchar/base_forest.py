"""Bases of positive roots, odd reflections and simplified Dynkin diagrams."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import networkx as nx

from . import cones
from ._linalg import CoordinateSolver
from .root_datum import RootDatum, Weight

CIRCLE, OTIMES, BULLET = "circle", "otimes", "bullet"
ASCII_NODE = {CIRCLE: "o", OTIMES: "(x)", BULLET: "*"}

EPS_LETTERS = ("ε", "e")
DELTA_LETTERS = ("δ", "d")
NEG_EPS_LETTERS = ("ε̄", "E")


class Base:
    """An ordered set Σ of simple roots with its positive system.

    Two bases compare equal when they span the same Δ⁺ (equivalently, have
    the same set of simple roots); the order of ``sigma`` is only a
    presentation.
    """

    __slots__ = ("datum", "sigma", "__dict__")

    def __init__(self, datum: RootDatum, sigma: Sequence[Weight]):
        self.datum = datum
        self.sigma = tuple(sigma)
        self._key = frozenset(self.sigma)

    def __eq__(self, other) -> bool:
        return isinstance(other, Base) and self.datum == other.datum and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.datum, self._key))

    def __repr__(self) -> str:
        return f"Base({self.datum.name}, [{', '.join(map(str, self.sigma))}])"

    @property
    def sort_key(self) -> tuple:
        return tuple(sorted(self.sigma))

    @cached_property
    def _solver(self) -> CoordinateSolver:
        return CoordinateSolver([w.coords for w in self.sigma])

    def coordinates(self, w: Weight) -> list | None:
        """Coordinates of ``w`` in Σ, or ``None`` outside the span."""
        if not self.sigma:
            return [] if w.is_zero() else None
        return self._solver.coords(w.coords)

    @cached_property
    def positive_roots(self) -> frozenset[Weight]:
        out = set()
        for r in self.datum.all_roots:
            c = self.coordinates(r)
            if c is not None and all(x >= 0 for x in c):
                out.add(r)
        return frozenset(out)

    @cached_property
    def iso_subset(self) -> tuple[Weight, ...]:
        return tuple(b for b in self.sigma if b in self.datum.iso_roots)

    def validate(self) -> None:
        d = self.datum
        if any(s not in d.all_roots for s in self.sigma):
            raise ValueError("base elements must be roots")
        self._solver  # raises on linear dependence
        for r in d.all_roots:
            c = self.coordinates(r)
            if c is None or not all(isinstance(x, int) for x in c):
                raise ValueError(f"root {r} is not an integral combination of the base")
            if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                raise ValueError(f"root {r} is neither positive nor negative")
        if not d.even_positive_roots <= self.positive_roots:
            raise ValueError("base is not compatible with the even positive system")

    @cached_property
    def word(self) -> str | None:
        """The ε/δ word of the base when it has one (gl, sl, osp)."""
        return base_word(self.datum, self)


def make_base(datum: RootDatum, sigma: Sequence[Weight]) -> Base:
    b = Base(datum, [datum.normalize(s) for s in sigma])
    b.validate()
    return b


# -- words --------------------------------------------------------------------

def _parse_word(word: str) -> list[str]:
    letters = []
    i = 0
    while i < len(word):
        ch = word[i]
        if word.startswith("ε̄", i):
            letters.append("-e")
            i += 2
        elif ch in EPS_LETTERS:
            letters.append("e")
            i += 1
        elif ch == "E":
            letters.append("-e")
            i += 1
        elif ch in DELTA_LETTERS:
            letters.append("d")
            i += 1
        elif ch.isspace():
            i += 1
        else:
            raise ValueError(f"bad letter {ch!r} in word {word!r}")
    return letters


def _letter_weights(datum: RootDatum, letters: list[str]) -> list[Weight]:
    ne = sum(1 for x in letters if x != "d")
    nd = sum(1 for x in letters if x == "d")
    if (ne, nd) != (datum.m, datum.n):
        raise ValueError(f"word needs {datum.m} ε's and {datum.n} δ's")
    out, i, j = [], 0, 0
    for x in letters:
        if x == "d":
            j += 1
            out.append(datum.d(j))
        else:
            i += 1
            if x == "-e" and (datum.family != "ospD" or i != datum.m):
                raise ValueError("a barred ε is only allowed for the last ε of osp(2m|2n)")
            out.append(-datum.e(i) if x == "-e" else datum.e(i))
    return out


def base_from_word(datum: RootDatum, word: str) -> Base:
    """The base with simple roots ``w_1 - w_2, w_2 - w_3, ...``.

    For osp the tail is ``w_k`` (2m+1 case), ``2 w_k`` (2m case, last letter
    δ) or ``w_{k-1} + w_k`` (2m case, last letter ε).
    """
    if datum.family not in ("gl", "sl", "ospB", "ospD"):
        raise ValueError(f"words do not describe bases of {datum.name}")
    letters = _parse_word(word)
    w = _letter_weights(datum, letters)
    sigma = [w[k] - w[k + 1] for k in range(len(w) - 1)]
    if datum.family == "ospB":
        sigma.append(w[-1])
    elif datum.family == "ospD":
        sigma.append(2 * w[-1] if letters[-1] == "d" else w[-2] + w[-1])
    return make_base(datum, sigma)


def base_word(datum: RootDatum, base: Base) -> str | None:
    if datum.family not in ("gl", "sl", "ospB", "ospD"):
        return None
    variants = [[("ε", datum.e(i)) for i in range(1, datum.m + 1)]]
    if datum.family == "ospD":
        v = list(variants[0])
        v[-1] = ("ε̄", -datum.e(datum.m))
        variants.append(v)
    for eps in variants:
        letters = eps + [("δ", datum.d(j)) for j in range(1, datum.n + 1)]
        pos = base.positive_roots
        above = {}
        for s, x in letters:
            above[x] = sum(1 for _, y in letters if y != x and datum.normalize(y - x) in pos)
        if sorted(above.values()) != list(range(len(letters))):
            continue
        order = sorted(letters, key=lambda t: above[t[1]])
        word = "".join(s for s, _ in order)
        try:
            if base_from_word(datum, word) == base:
                return word
        except ValueError:
            continue
    return None


def mixed_word(datum: RootDatum) -> str:
    """Word of the mixed base (for gl(n|n), the alternating word)."""
    m, n = datum.m, datum.n
    if datum.family in ("gl", "sl"):
        if m >= n:
            return "εδ" * n + "ε" * (m - n)
        return "δε" * m + "δ" * (n - m)
    if datum.family == "ospB":
        if m >= n:
            return "ε" * (m - n) + "εδ" * n
        return "δ" * (n - m) + "εδ" * m
    if datum.family == "ospD":
        if m > n + 1:
            return "ε" * (m - n - 1) + "εδ" * n + "ε"
        return "δ" * (n - m + 1) + "εδ" * (m - 1) + "ε"
    raise ValueError(f"no mixed word for {datum.name}")


def default_base(datum: RootDatum, kind: str = "mixed") -> Base:
    """The mixed or distinguished base.

    For gl(n|n), n >= 2, "mixed" means the base of the word (εδ)^(n-1) δε,
    which is the one used for short bases there. q and p have a single
    positive system and return it for either kind.
    """
    if kind not in ("mixed", "distinguished"):
        raise ValueError(f"unknown base kind {kind!r}")
    f, m, n = datum.family, datum.m, datum.n
    if f == "q":
        return make_base(datum, datum.pi)
    if f == "p":
        return make_base(datum, list(datum.pi) + [2 * datum.e(m)])
    if kind == "distinguished":
        if f in ("gl", "sl"):
            return base_from_word(datum, "ε" * m + "δ" * n)
        if f == "ospD" and m == 1:
            return base_from_word(datum, "ε" + "δ" * n)
        return base_from_word(datum, "δ" * n + "ε" * m)
    if f == "gl" and m == n >= 2:
        return base_from_word(datum, "εδ" * (n - 1) + "δε")
    return base_from_word(datum, mixed_word(datum))


# -- odd reflections ----------------------------------------------------------

def odd_reflect(datum: RootDatum, base: Base, beta: Weight) -> Base:
    """The base of ``(Δ⁺ \\ {β}) ∪ {-β}`` for an isotropic simple root β."""
    return _odd_reflect(datum, base, datum.normalize(beta))


@lru_cache(maxsize=4096)
def _odd_reflect(datum: RootDatum, base: Base, beta: Weight) -> Base:
    if not datum.is_kac_moody:
        raise ValueError(f"odd reflections are not defined for {datum.name}")
    if beta not in base.iso_subset:
        raise ValueError(f"{beta} is not an isotropic simple root")
    sigma = []
    for a in base.sigma:
        if a == beta:
            sigma.append(-beta)
        elif datum.form(a, beta) == 0:
            sigma.append(a)
        else:
            sigma.append(datum.normalize(a + beta))
    new = Base(datum, sigma)
    expected = (base.positive_roots - {beta}) | {-beta}
    if new.positive_roots != expected:
        raise AssertionError(f"odd reflection at {beta} broke the positive system")
    return new


@dataclass(frozen=True)
class BaseGraph:
    """All bases reachable by odd reflections, with one path to each."""

    start: Base
    bases: tuple[Base, ...]
    # base -> list of reflected roots leading to it from start
    paths: dict
    # base -> (parent, beta) in the BFS tree; start maps to None
    tree: dict
    # base -> tuple of (beta, neighbour)
    edges: dict


@lru_cache(maxsize=None)
def base_graph(datum: RootDatum, start: Base) -> BaseGraph:
    if not datum.is_kac_moody:
        return BaseGraph(start, (start,), {start: []}, {start: None}, {start: ()})
    paths = {start: []}
    tree = {start: None}
    edges = {}
    todo = deque([start])
    while todo:
        b = todo.popleft()
        nbrs = []
        for beta in b.iso_subset:
            c = odd_reflect(datum, b, beta)
            nbrs.append((beta, c))
            if c not in paths:
                paths[c] = paths[b] + [beta]
                tree[c] = (b, beta)
                todo.append(c)
        edges[b] = tuple(nbrs)
    bases = tuple(sorted(paths, key=lambda b: b.sort_key))
    return BaseGraph(start, bases, paths, tree, edges)


def enumerate_bases(datum: RootDatum, start: Base | None = None) -> list[Base]:
    """Every base reachable from ``start`` by odd reflections, sorted."""
    if start is None:
        start = default_base(datum)
    return list(base_graph(datum, start).bases)


def bases_containing(datum: RootDatum, alpha: Weight, start: Base) -> list[Base]:
    """The bases with α or α/2 simple."""
    return [b for b in enumerate_bases(datum, start) if contains_root(b, alpha)]


def contains_root(base: Base, alpha: Weight) -> bool:
    return alpha in base.sigma or alpha * Fraction(1, 2) in base.sigma


# -- diagrams -----------------------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    nodes: tuple  # (root, kind) in base order
    edges: tuple  # sorted (i, j), i < j

    def kinds(self) -> list[str]:
        return [k for _, k in self.nodes]

    def ascii(self) -> str:
        labels = [ASCII_NODE[k] for k in self.kinds()]
        chain = all(e == (i, i + 1) for i, e in enumerate(self.edges)) and len(self.edges) == len(self.nodes) - 1
        if chain or not self.nodes:
            return "-".join(labels)
        parts = [f"{i}:{lab}" for i, lab in enumerate(labels)]
        return " ".join(parts) + " ; " + " ".join(f"{i}-{j}" for i, j in self.edges)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        for i, (_, k) in enumerate(self.nodes):
            g.add_node(i, kind=k)
        g.add_edges_from(self.edges)
        return g


def node_kind(datum: RootDatum, root: Weight) -> str:
    if root in datum.iso_roots:
        return OTIMES
    if root in datum.odd_roots:
        return BULLET
    return CIRCLE


def dynkin_diagram(datum: RootDatum, base: Base) -> Diagram:
    if not datum.is_kac_moody:
        raise ValueError(f"diagrams are drawn for Kac-Moody families only, not {datum.name}")
    nodes = tuple((r, node_kind(datum, r)) for r in base.sigma)
    edges = tuple(
        (i, j)
        for i in range(len(base.sigma))
        for j in range(i + 1, len(base.sigma))
        if datum.form(base.sigma[i], base.sigma[j]) != 0
    )
    return Diagram(nodes, edges)


def is_mixed(datum: RootDatum, base: Base) -> bool | None:
    """Whether the diagram matches the mixed diagram of the family."""
    if not datum.is_kac_moody:
        return None
    ref = dynkin_diagram(datum, base_from_word(datum, mixed_word(datum))).graph()
    return nx.is_isomorphic(dynkin_diagram(datum, base).graph(), ref, node_match=lambda a, b: a["kind"] == b["kind"])


# -- structural properties ----------------------------------------------------

@dataclass(frozen=True)
class Pr2Result:
    holds: bool
    witness: Weight | None = None

    def __bool__(self) -> bool:
        return self.holds


def pr3_counts(datum: RootDatum, base: Base) -> tuple[int, int]:
    """``(ℓ' - ℓ, #⊗ - #odd edges)`` for the simplified diagram."""
    dia = dynkin_diagram(datum, base)
    kinds = dia.kinds()
    odd_edges = sum(1 for i, j in dia.edges if kinds[i] != CIRCLE and kinds[j] != CIRCLE)
    return len(base.sigma) - len(datum.pi), kinds.count(OTIMES) - odd_edges


def satisfies_pr2(datum: RootDatum, base: Base) -> Pr2Result:
    """Each α in π is a sum of at most two simple roots."""
    witness = None
    for a in datum.pi:
        c = base.coordinates(a)
        if sum(c) > 2:
            witness = a
            break
    result = Pr2Result(witness is None, witness)
    if datum.is_kac_moody:
        lhs, rhs = pr3_counts(datum, base)
        if (lhs == rhs) != result.holds:
            raise AssertionError(f"(Pr2) and the diagram count disagree on {base}")
    return result


def satisfies_coro_hypothesis(datum: RootDatum, base: Base) -> bool:
    """Every α in π lies (or has α/2) in Σ or in ``r_β Σ`` for some isotropic β in Σ."""
    if not datum.is_kac_moody:
        raise ValueError(f"{datum.name} is not Kac-Moody")
    for a in datum.pi:
        if contains_root(base, a):
            continue
        if not any(contains_root(odd_reflect(datum, base, b), a) for b in base.iso_subset):
            return False
    return True


def _pr1_rows(datum: RootDatum, base: Base, normalize_sum: bool) -> list:
    k = len(base.sigma)
    rows = []
    for i in range(k):
        rows.append((tuple(int(i == j) for j in range(k)), 0))
    for a in datum.pi:
        rows.append((tuple(-datum.coroot_pairing(s, a) for s in base.sigma), 0))
    if normalize_sum:
        rows.append(((1,) * k, -1))
        rows.append(((-1,) * k, 1))
    return rows


def pr1_fast_path(datum: RootDatum, base: Base) -> bool | None:
    """``True`` when a sufficient criterion for (Pr1) applies, else ``None``."""
    pos = base.positive_roots
    if frozenset(datum.normalize(-datum.w0(r)) for r in pos) == pos:
        return True
    if datum.family in ("gl", "sl") and datum.m != datum.n:
        w = base.word
        if w and w[0] == w[-1]:
            return True
    return None


def check_pr1(datum: RootDatum, base: Base, fast: bool = True) -> bool:
    """``-ℝ≥0 Δ⁺ ∩ ℝ≥0 P⁺(π) = {0}``, decided exactly."""
    if fast and pr1_fast_path(datum, base):
        return True
    if not base.sigma:
        return True
    return not cones.is_feasible(_pr1_rows(datum, base, True), len(base.sigma))
