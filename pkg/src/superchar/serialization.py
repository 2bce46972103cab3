"""JSON interchange: algebras, weights, bases and ring elements.

Rationals travel as strings (``"3"``, ``"-1/2"``) so that every number is
exact and survives a round trip unchanged.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from ._linalg import q
from .base_forest import Base, base_from_word, default_base, enumerate_bases, make_base
from .root_datum import RootDatum, Weight, build_root_datum
from .xi_ring import RingElement, XiCoeff

_SHORTHAND = re.compile(r"^\s*(gl|sl|osp|q|p)\s*[(_]?\s*(\d+)\s*(?:\|\s*(\d+))?\s*\)?\s*$")


def rational(x) -> Fraction | int:
    """Parse an exact rational from an int, a ``"p/q"`` string or an integral float."""
    if isinstance(x, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(x, float):
        if not x.is_integer():
            raise ValueError(f"inexact number {x!r}; pass rationals as \"p/q\" strings")
        return int(x)
    if isinstance(x, (int, Fraction)):
        return q(x)
    if isinstance(x, str):
        return q(Fraction(x.strip()))
    raise ValueError(f"cannot read a rational from {x!r}")


def rational_str(x) -> str:
    return str(q(x))


# -- algebras -----------------------------------------------------------------

def parse_algebra(source: str | dict) -> RootDatum:
    """Accept a JSON descriptor (string or dict) or a shorthand like ``gl(2|1)``, ``osp(3|2)``, ``q2``."""
    if isinstance(source, str):
        s = source.strip()
        if s.startswith("{"):
            source = json.loads(s)
        else:
            return _parse_shorthand(s)
    if not isinstance(source, dict) or "family" not in source:
        raise ValueError(f"algebra descriptor needs a 'family': {source!r}")
    return build_root_datum(source["family"], int(source.get("m", 0)), source.get("n"))


def _parse_shorthand(s: str) -> RootDatum:
    m = _SHORTHAND.match(s)
    if not m:
        raise ValueError(f"cannot parse algebra {s!r}")
    fam, a, b = m.group(1), int(m.group(2)), m.group(3)
    if fam in ("q", "p"):
        if b is not None:
            raise ValueError(f"{fam} takes a single rank")
        return build_root_datum(fam, a)
    if b is None:
        if fam == "gl":
            return build_root_datum("gl", a, 0)
        raise ValueError(f"{s!r} needs the form {fam}(m|n)")
    b = int(b)
    if fam == "osp":
        if b % 2:
            raise ValueError("osp(M|N) needs N even")
        return build_root_datum("ospB" if a % 2 else "ospD", a // 2, b // 2)
    return build_root_datum(fam, a, b)


def algebra_json(datum: RootDatum) -> dict:
    return {"family": datum.family, "m": datum.m, "n": datum.n}


# -- weights ------------------------------------------------------------------

def weight_json(w: Weight) -> dict:
    return {"eps": [rational_str(x) for x in w.eps], "delta": [rational_str(x) for x in w.delta]}


def parse_weight(datum: RootDatum, source: Any) -> Weight:
    """A weight from ``{"eps": [...], "delta": [...]}``, a flat coordinate list, or JSON text."""
    if isinstance(source, str):
        source = json.loads(source)
    if isinstance(source, dict):
        eps = [rational(x) for x in source.get("eps", [])]
        delta = [rational(x) for x in source.get("delta", [])]
    elif isinstance(source, (list, tuple)):
        coords = [rational(x) for x in source]
        eps, delta = coords[: datum.m], coords[datum.m:]
    else:
        raise ValueError(f"cannot read a weight from {source!r}")
    if len(eps) != datum.m or len(delta) != datum.n:
        raise ValueError(f"{datum.name} weights need {datum.m} ε and {datum.n} δ coordinates")
    return datum.normalize(Weight(eps, delta))


# -- bases --------------------------------------------------------------------

def base_json(base: Base) -> dict:
    out = {"sigma": [weight_json(w) for w in base.sigma]}
    if base.word:
        out["word"] = base.word
    return out


def parse_base(datum: RootDatum, source: Any = None) -> Base:
    """``None``/``"mixed"``/``"distinguished"``, an index into the sorted base list, a word, or a root list."""
    if source is None or source in ("mixed", "distinguished"):
        return default_base(datum, source or "mixed")
    if isinstance(source, int) or (isinstance(source, str) and source.strip().isdigit()):
        bases = enumerate_bases(datum, default_base(datum))
        i = int(source)
        if not 0 <= i < len(bases):
            raise ValueError(f"base index {i} out of range 0..{len(bases) - 1}")
        return bases[i]
    if isinstance(source, str) and source.strip().startswith(("[", "{")):
        source = json.loads(source)
    if isinstance(source, str):
        return base_from_word(datum, source)
    if isinstance(source, dict):
        if "word" in source and "sigma" not in source:
            return base_from_word(datum, source["word"])
        source = source["sigma"]
    return make_base(datum, [parse_weight(datum, w) for w in source])


# -- ring elements ------------------------------------------------------------

def coeff_json(c: XiCoeff) -> list:
    return [rational_str(c.a), rational_str(c.b)]


def element_json(x: RingElement) -> dict:
    return {
        "algebra": algebra_json(x.datum),
        "terms": [{"weight": weight_json(w), "coeff": coeff_json(c)} for w, c in x.terms.items()],
    }


def parse_element(source: Any, datum: RootDatum | None = None) -> RingElement:
    if isinstance(source, str):
        source = json.loads(source)
    if datum is None:
        datum = parse_algebra(source["algebra"])
    terms = []
    for t in source.get("terms", []):
        c = t.get("coeff", [1, 0])
        if not isinstance(c, (list, tuple)):
            c = [c, 0]
        terms.append((parse_weight(datum, t["weight"]), XiCoeff(rational(c[0]), rational(c[1]))))
    return RingElement(datum, terms)


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2)
