import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import weights
from superchar import (
    Unsupported,
    base_from_word,
    build_root_datum,
    default_base,
    enumerate_Y,
    enumerate_bases,
    highest_weights,
    is_dominant_integrable,
    is_dominant_integrable_closed,
    is_dominant_pi,
    satisfies_coro_hypothesis,
    track_highest_weight,
)
from superchar.base_forest import base_graph


def _box(d, r):
    k = d.m + d.n
    for c in itertools.product(range(-r, r + 1), repeat=k):
        yield d.weight(c[: d.m], c[d.m:])


def _kac_gl(d, lam):
    """Finite dimensionality for gl(m|n) read off the distinguished base."""
    e, dl = lam.eps, lam.delta
    ok = all(isinstance(x, int) and x >= 0 for x in (e[i] - e[i + 1] for i in range(len(e) - 1)))
    return ok and all(isinstance(x, int) and x >= 0 for x in (dl[j] - dl[j + 1] for j in range(len(dl) - 1)))


def _kac_osp_b(d, lam):
    """osp(2m+1|2), distinguished base δε...ε: a ∈ ℕ, ε part so(2m+1)-dominant, b_{a+1..m} = 0 if a < m."""
    a = lam.delta[0]
    b = lam.eps
    if not (isinstance(a, int) and a >= 0):
        return False
    if any(x < 0 for x in b) or any(b[i] < b[i + 1] for i in range(len(b) - 1)):
        return False
    if not (all(isinstance(x, int) for x in b) or all(isinstance(x - Fraction(1, 2), int) for x in b)):
        return False
    return a >= d.m or all(x == 0 for x in b[a:])


def _to_distinguished(d, base, lam):
    """Highest weight for the distinguished base, using the odd reflection rule directly."""
    target = default_base(d, "distinguished")
    path = base_graph(d, base).paths[target]
    b = base
    for beta in path:
        if d.form(lam, beta) != 0:
            lam = d.normalize(lam - beta)
        from superchar import odd_reflect

        b = odd_reflect(d, b, beta)
    assert b == target
    return lam


@pytest.mark.parametrize("m,n,r", [(2, 1, 3), (1, 2, 3), (2, 2, 2), (1, 1, 3)])
def test_general_criterion_matches_kac_on_gl(m, n, r):
    d = build_root_datum("gl", m, n)
    for base in enumerate_bases(d):
        for lam in _box(d, r):
            expected = _kac_gl(d, _to_distinguished(d, base, lam))
            assert is_dominant_integrable(d, base, lam) == expected, (base, lam)


@pytest.mark.parametrize("m,r", [(1, 3), (2, 2)])
def test_general_criterion_matches_kac_on_osp_b(m, r):
    d = build_root_datum("ospB", m, 1)
    for base in enumerate_bases(d):
        for lam in _box(d, r):
            expected = _kac_osp_b(d, _to_distinguished(d, base, lam))
            assert is_dominant_integrable(d, base, lam) == expected, (base, lam)


@pytest.mark.parametrize("key", [("gl", 2, 1), ("gl", 1, 2), ("ospB", 1, 1), ("ospD", 2, 1), ("gl", 3, 1)])
def test_closed_form_agrees_where_hypothesis_holds(key):
    d = build_root_datum(*key)
    for base in enumerate_bases(d):
        if not satisfies_coro_hypothesis(d, base):
            continue
        for lam in _box(d, 2):
            assert is_dominant_integrable_closed(d, base, lam) == is_dominant_integrable(d, base, lam)


def test_closed_form_refuses_without_hypothesis():
    d = build_root_datum("gl", 2, 2)
    b = base_from_word(d, "εδδε")
    with pytest.raises(ValueError, match="satisfies_coro_hypothesis"):
        is_dominant_integrable_closed(d, b, d.e(1))


def test_closed_form_is_wrong_off_hypothesis():
    # the check=False escape hatch exposes the disagreement on εδδε
    d = build_root_datum("gl", 2, 2)
    b = base_from_word(d, "εδδε")
    bad = [lam for lam in _box(d, 1) if is_dominant_integrable_closed(d, b, lam, check=False) != is_dominant_integrable(d, b, lam)]
    assert bad


# -- examples ------------------------------------------------------------------

def test_is_dominant_pi_examples():
    d = build_root_datum("gl", 2, 1)
    assert is_dominant_pi(d, d.e(1))
    assert not is_dominant_pi(d, d.e(2))
    assert is_dominant_pi(d, d.d(1))


def test_track_highest_weight_examples():
    d = build_root_datum("gl", 2, 1)
    mixed = default_base(d)
    beta = d.e(1) - d.d(1)
    assert track_highest_weight(d, d.e(1), mixed, [beta]) == d.d(1)
    assert track_highest_weight(d, d.zero, mixed, [beta]) == d.zero
    g = build_root_datum("gl", 1, 1)
    b = g.e(1) - g.d(1)
    for c in (1, 2, -3):
        assert track_highest_weight(g, b * c, default_base(g), [b]) == b * c


def test_highest_weights_cover_all_bases():
    d = build_root_datum("gl", 2, 2)
    base = default_base(d)
    hw = highest_weights(d, base, d.e(1))
    assert set(hw) == set(enumerate_bases(d))
    g = base_graph(d, base)
    for b, path in g.paths.items():
        assert hw[b] == track_highest_weight(d, d.e(1), base, path)


def test_dominance_examples():
    d = build_root_datum("gl", 2, 1)
    mixed = default_base(d)
    assert not is_dominant_integrable(d, mixed, d.d(1))
    assert is_dominant_integrable(d, mixed, d.e(1))
    assert is_dominant_integrable_closed(d, mixed, d.e(1))
    assert not is_dominant_integrable_closed(d, mixed, d.d(1))
    assert is_dominant_integrable_closed(d, mixed, d.zero)
    q2 = build_root_datum("q", 2)
    assert not is_dominant_integrable(q2, default_base(q2), q2.weight((1, 1)))
    assert is_dominant_integrable(q2, default_base(q2), q2.weight((2, 1)))
    assert is_dominant_integrable(q2, default_base(q2), q2.zero)


def test_p_is_unsupported():
    p2 = build_root_datum("p", 2)
    with pytest.raises(Unsupported):
        is_dominant_integrable(p2, default_base(p2), p2.e(1))


# -- Y sets ----------------------------------------------------------------------

def _y_oracle(d, base, lam, r):
    """Dominant μ ≠ λ in a box with λ - μ a nonnegative integral combination of Σ."""
    sig = np.array([[float(x) for x in s.coords] for s in base.sigma]).T
    out = set()
    for mu in _box(d, r):
        if mu == lam or not is_dominant_pi(d, mu):
            continue
        diff = np.array([float(x) for x in (lam - mu).coords])
        k, *_ = np.linalg.lstsq(sig, diff, rcond=None)
        if np.allclose(sig @ k, diff) and np.allclose(k, np.round(k)) and (np.round(k) >= 0).all():
            out.add(mu)
    return out


def test_y_example_gl21():
    d = build_root_datum("gl", 2, 1)
    ys = enumerate_Y(d, default_base(d), d.e(1))
    assert set(ys) == {d.d(1), d.weight((1, 1), (-1,))}


@pytest.mark.parametrize("key", [("gl", 2, 1), ("ospB", 1, 1), ("q", 2, None)])
def test_y_of_zero_is_empty(key):
    d = build_root_datum(*key)
    assert enumerate_Y(d, default_base(d), d.zero) == []


def test_y_on_gl1_is_empty():
    d = build_root_datum("gl", 1, 0)
    assert enumerate_Y(d, default_base(d), d.weight((5,))) == []


def test_y_refuses_without_pr1():
    d = build_root_datum("gl", 2, 1)
    with pytest.raises(ValueError, match="Pr1"):
        enumerate_Y(d, default_base(d, "distinguished"), d.e(1))


@pytest.mark.parametrize("key", [("gl", 2, 1), ("q", 2, None), ("ospB", 1, 1)])
def test_y_matches_box_oracle(key):
    d = build_root_datum(*key)
    base = default_base(d)
    for lam in _box(d, 2):
        if not is_dominant_pi(d, lam):
            continue
        ys = set(enumerate_Y(d, base, lam))
        r = 2 + max((max(abs(x) for x in y.coords) for y in ys), default=0)
        assert ys == _y_oracle(d, base, lam, int(r))


@given(weights(build_root_datum("gl", 2, 1)))
def test_dominance_is_base_independent_for_the_module(lam):
    d = build_root_datum("gl", 2, 1)
    base = default_base(d)
    hw = highest_weights(d, base, lam)
    verdicts = {is_dominant_integrable(d, b, mu) for b, mu in hw.items()}
    assert len(verdicts) == 1


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_q2_criterion(a, b):
    d = build_root_datum("q", 2)
    expected = a >= b and (a != b or a == 0)
    assert is_dominant_integrable(d, default_base(d), d.weight((a, b))) == expected
