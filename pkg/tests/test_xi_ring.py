from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import clifford_oracle as co
from strategies import ALL_DATA, elements, xi_coeffs
from superchar import (
    XI,
    RingElement,
    XiCoeff,
    build_root_datum,
    ch_xi_C,
    ev_condition,
    explain_A,
    gl11_character,
    in_A,
    in_R,
    iota,
    pair_hbeta,
    psi,
    str_split,
    string_condition,
    sv_condition,
)
from superchar.xi_ring import (
    ch_xi_C_coeff,
    from_psi,
    in_A_psi,
    is_w_invariant,
    parity,
    string_violation,
    symmetrize,
)

GL21 = build_root_datum("gl", 2, 1)
GL11 = build_root_datum("gl", 1, 1)
Q2 = build_root_datum("q", 2)
P2 = build_root_datum("p", 2)


def mono(d, w, c=1):
    return RingElement.monomial(d, w, c)


# -- ℤ[ξ] and the group ring -----------------------------------------------------

@given(xi_coeffs, xi_coeffs, xi_coeffs)
def test_xi_coefficients_form_a_commutative_ring(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert XI * XI == XiCoeff(1)


@given(xi_coeffs, xi_coeffs)
def test_psi_is_multiplicative_on_coefficients(a, b):
    for s in "+-":
        assert (a * b).psi(s) == a.psi(s) * b.psi(s)
        assert (a + b).psi(s) == a.psi(s) + b.psi(s)
    assert XiCoeff.from_psi(a.psi("+"), a.psi("-")) == a


@given(xi_coeffs, xi_coeffs)
def test_divided_by_inverts_multiplication(a, d):
    assume(d)
    c = (a * d).divided_by(d)
    assert c is not None and c * d == a * d


@given(st.sampled_from(ALL_DATA).flatmap(lambda d: st.tuples(elements(d), elements(d), elements(d))))
def test_group_ring_axioms(xyz):
    x, y, z = xyz
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == RingElement.zero(x.datum)
    assert x * RingElement.one(x.datum) == x


@given(st.sampled_from(ALL_DATA).flatmap(lambda d: st.tuples(elements(d), elements(d))))
def test_psi_is_a_ring_homomorphism(xy):
    x, y = xy
    for s in "+-":
        assert psi(x * y, s) == psi(x, s) * psi(y, s)
        assert psi(x + y, s) == psi(x, s) + psi(y, s)
    assert from_psi(psi(x, "+"), psi(x, "-")) == x


def test_ring_examples():
    e1, d1 = GL21.e(1), GL21.d(1)
    assert mono(GL21, e1) * mono(GL21, -e1) == RingElement.one(GL21)
    one = RingElement.one(GL21)
    assert (one + one * XI) * (one - one * XI) == RingElement.zero(GL21)
    x = mono(GL21, e1) + mono(GL21, d1, XI)
    assert x ** 2 == mono(GL21, e1 * 2) + mono(GL21, e1 + d1, XiCoeff(0, 2)) + mono(GL21, d1 * 2)


def test_psi_examples():
    one = RingElement.one(GL11)
    assert psi(one + one * XI, "-") == RingElement.zero(GL11)
    lam = GL11.e(1)
    beta = GL11.e(1) - GL11.d(1)
    x = mono(GL11, lam) * (one + mono(GL11, -beta, XI))
    assert psi(x, "+") == mono(GL11, lam) + mono(GL11, lam - beta)
    assert psi(x, "-") == mono(GL11, lam) - mono(GL11, lam - beta)


def test_from_psi_rejects_parity_mismatch():
    with pytest.raises(ValueError):
        from_psi(RingElement.one(GL21), RingElement.zero(GL21))


def test_w_invariance_examples():
    e1, e2 = GL21.e(1), GL21.e(2)
    assert is_w_invariant(mono(GL21, e1) + mono(GL21, e2))
    assert not is_w_invariant(mono(GL21, e1))
    assert is_w_invariant(mono(GL11, GL11.e(1), XI))


@given(st.sampled_from(ALL_DATA).flatmap(elements))
def test_symmetrize_is_w_invariant(x):
    assert is_w_invariant(symmetrize(x))


# -- h-modules -------------------------------------------------------------------

@pytest.mark.parametrize("nu", [(0, 0), (1, 0), (1, -1), (2, 3), (0, 0, 1), (1, 2, 0), (1, 2, 3), (1, 1, 1, 1), (0, 1, 0, 2, 5)])
def test_ch_xi_C_matches_clifford_module(nu):
    d = build_root_datum("q", len(nu))
    w = d.weight(nu)
    dim, sdim = co.module(nu)
    c = ch_xi_C_coeff(d, w)
    assert (c.psi("+"), c.psi("-")) == (dim, sdim)


def test_ch_xi_C_examples():
    assert ch_xi_C(Q2, Q2.zero) == RingElement.one(Q2)
    assert ch_xi_C(Q2, Q2.weight((1, 0))) == mono(Q2, Q2.weight((1, 0)), XiCoeff(1, 1))
    assert ch_xi_C(Q2, Q2.weight((1, -1))) == mono(Q2, Q2.weight((1, -1)), XiCoeff(1, 1))
    assert ch_xi_C(GL21, GL21.e(1)) == mono(GL21, GL21.e(1))


def test_in_R_examples():
    x = mono(GL21, GL21.e(1), XiCoeff(3, -2)) + mono(GL21, GL21.d(1) * 2)
    assert in_R(GL21, x, "int")
    assert not in_R(Q2, mono(Q2, Q2.weight((1, 0))))
    assert in_R(Q2, mono(Q2, Q2.weight((1, 0)), XiCoeff(1, 1)))
    half = Q2.weight((Fraction(1, 2), Fraction(-1, 2)))
    assert in_R(Q2, mono(Q2, half, XiCoeff(1, 1)), "half")
    assert not in_R(Q2, mono(Q2, Q2.weight((1, 0)), XiCoeff(1, 1)), "half")


# -- string conditions -------------------------------------------------------------

def _string_oracle(x, beta, span=12):
    """Walk every β-line through the support and sum (-ξ)^i m_{ν+iβ} directly."""
    d = x.datum
    for w in x.support():
        if pair_hbeta(d, w, beta) == 0:
            continue
        total = XiCoeff()
        for i in range(-span, span + 1):
            sign = XiCoeff(0, -1) if i % 2 else XiCoeff(1)
            c = x.coeff(d.normalize(w + beta * i))
            # (-ξ)^i for negative i equals (-ξ)^{|i|} since (-ξ)² = 1
            total = total + c * sign
        if total:
            return False
    return True


@given(st.sampled_from([GL21, GL11, Q2, P2, build_root_datum("ospB", 1, 1)]).flatmap(elements))
def test_string_condition_matches_line_walk(x):
    d = x.datum
    for beta in d.iso_roots:
        assert string_condition(d, x, beta) == _string_oracle(x, beta)


def _gl11_pair(c, k):
    """A gl(1|1) element passing the string condition: e^ν (1 + ξ e^{-β}) shifted along the line."""
    beta = GL11.e(1) - GL11.d(1)
    nu = GL11.weight((c,), (0,))
    return gl11_character(GL11, nu + beta * k)


@given(st.integers(-3, 3).filter(bool), st.integers(-2, 2))
def test_string_condition_gl11_examples(c, k):
    beta = GL11.e(1) - GL11.d(1)
    ch = _gl11_pair(c, k)
    assert string_condition(GL11, ch, beta)
    lam = GL11.weight((c,), (0,)) + beta * k
    assert not string_condition(GL11, mono(GL11, lam), beta)


def test_string_condition_gl21_example():
    e1, e2, d1 = GL21.e(1), GL21.e(2), GL21.d(1)
    b = mono(GL21, e1) + mono(GL21, e2) + mono(GL21, d1, XI)
    assert string_condition(GL21, b, e1 - d1)
    assert string_violation(mono(GL21, e1) + mono(GL21, e2), e1 - d1) is not None


def test_in_A_examples():
    e1, e2, d1 = GL21.e(1), GL21.e(2), GL21.d(1)
    assert in_A(GL21, RingElement.one(GL21))
    assert in_A(GL21, mono(GL21, e1) + mono(GL21, e2) + mono(GL21, d1, XI))
    v = explain_A(GL21, mono(GL21, e1) + mono(GL21, e2))
    assert not v and "string" in v.reason
    assert not in_A(GL21, mono(GL21, e1))  # not W-invariant


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_gl11_products_stay_in_A(a, b, c, k):
    x = gl11_character(GL11, GL11.weight((a,), (b,)))
    y = gl11_character(GL11, GL11.weight((c,), (k,)))
    assert in_A(GL11, x * y)
    assert in_A(GL11, x + y * XI)


def test_gl11_character_examples():
    beta = GL11.e(1) - GL11.d(1)
    assert gl11_character(GL11, GL11.zero) == RingElement.one(GL11)
    assert gl11_character(GL11, beta) == mono(GL11, beta)
    assert gl11_character(GL11, GL11.e(1)) == mono(GL11, GL11.e(1)) + mono(GL11, GL11.d(1), XI)


# -- sv / ev -------------------------------------------------------------------

def test_sv_examples():
    beta = GL11.e(1) - GL11.d(1)
    omega = GL11.e(1)
    one = RingElement.one(GL11)
    for s in "+-":
        assert sv_condition(GL11, one, beta, omega, s)
    ch = gl11_character(GL11, GL11.weight((2,), (0,)))
    assert sv_condition(GL11, ch, beta, omega, "-")
    assert not sv_condition(GL11, mono(GL11, GL11.weight((2,), (0,))), beta, omega, "-")


def test_ev_examples():
    e1, e2, d1 = GL21.e(1), GL21.e(2), GL21.d(1)
    beta = e1 - d1
    one = RingElement.one(GL21)
    assert ev_condition(GL21, one, beta, e1)
    b = mono(GL21, e1) + mono(GL21, e2) + mono(GL21, d1, XI)
    assert ev_condition(GL21, b, beta, e1)
    assert not ev_condition(GL21, mono(GL21, e1) + mono(GL21, e2), beta, e1)


@given(elements(GL11, max_terms=5))
def test_sv_ev_and_string_agree_at_psi_minus_on_gl11(x):
    beta = GL11.e(1) - GL11.d(1)
    omega = GL11.e(1)
    a = in_A_psi(GL11, x, "-")
    assert sv_condition(GL11, x, beta, omega, "-") == a
    assert ev_condition(GL11, x, beta, omega, "-") == a


# -- parity, ι and str ------------------------------------------------------------------

def test_iota_examples():
    assert iota(GL21, mono(GL21, GL21.d(1))) == mono(GL21, GL21.d(1), -1)
    assert iota(GL21, mono(GL21, GL21.e(1))) == mono(GL21, GL21.e(1))
    assert parity(GL21, GL21.weight((3, 1), (3,))) == 1


def test_iota_rejects_unsupported_families():
    with pytest.raises(ValueError):
        iota(P2, mono(P2, P2.e(1)))
    with pytest.raises(ValueError):
        iota(build_root_datum("sl", 2, 1), RingElement.one(build_root_datum("sl", 2, 1)))


@given(elements(GL21), elements(GL21))
def test_iota_is_an_involutive_ring_homomorphism(x, y):
    assert iota(GL21, x * y) == iota(GL21, x) * iota(GL21, y)
    assert iota(GL21, iota(GL21, x)) == x


@given(elements(GL21, max_terms=5))
def test_iota_exchanges_the_psi_levels(x):
    # ι acts on ψ-level (ξ-free) elements
    x = psi(symmetrize(x), "-")
    assert in_A_psi(GL21, x, "-") == in_A_psi(GL21, iota(GL21, x), "+")


def test_str_split_examples():
    assert str_split(P2, RingElement.zero(P2)) == {}
    u = mono(P2, P2.weight((1, 0))) + mono(P2, P2.weight((0, 2)), XI)
    assert list(str_split(P2, u)) == [0]
    h = Fraction(1, 2)
    v = mono(P2, P2.weight((h, h))) * u + mono(P2, P2.weight((2, 1)))
    parts = str_split(P2, v)
    assert set(parts) == {0, h}
    assert parts[h] == u


@given(elements(P2), elements(P2), st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)]))
def test_str_split_recombines(u, v, c):
    x = mono(P2, P2.weight((c, c))) * u + v
    parts = str_split(P2, x)
    total = RingElement.zero(P2)
    for k, a in parts.items():
        assert all(w.is_integral() for w in a.support())
        total = total + mono(P2, P2.weight((k, k))) * a
    assert total == x
