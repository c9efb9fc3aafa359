import pickle

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qcongruence.polyring import (
    NEG_INF,
    InexactDivisionError,
    IntPoly,
    Modulus,
    NonMonicModulusError,
    _mul_list,
    _schoolbook,
    eval_int,
    poly_exact_div,
    poly_rem,
    q_pochhammer,
    render,
    substitute_power,
)
from qcongruence.congruences import modulus_poly
from qcongruence.qcombinatorics import gaussian_binomial, q_integer

BIG = 10**18
coeffs = st.lists(st.integers(-BIG, BIG), max_size=65)
polys = coeffs.map(IntPoly)
small_polys = st.lists(st.integers(-50, 50), max_size=40).map(IntPoly)

q = sympy.Symbol("q")


def to_sympy(f):
    return sympy.Poly(list(reversed(f.coeffs)) or [0], q)


def from_sympy(expr):
    return IntPoly(reversed(sympy.Poly(expr, q).all_coeffs()))


def P(*c):
    return IntPoly(c)


# --- canonical form and degree ------------------------------------------------


def test_trailing_zeros_trimmed():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()


def test_zero_degree_is_sentinel():
    zero = IntPoly()
    assert zero.degree is NEG_INF
    assert NEG_INF < 0 and NEG_INF < -(10**9)
    with pytest.raises(TypeError):
        NEG_INF + 1
    assert P(3).degree == 0


def test_pickle_roundtrip():
    f = P(1, -2, 3)
    assert pickle.loads(pickle.dumps(f)) == f
    assert pickle.loads(pickle.dumps(NEG_INF)) is NEG_INF


# --- poly_arith --------------------------------------------------------------


def test_add_cancels():
    assert P(1, 1) + P(1, -1) == P(2)


def test_sub_self_is_zero():
    d = P(1, 1) - P(1, 1)
    assert d.coeffs == ()


def test_scale():
    assert P(1, 1).scale(3) == P(3, 3)
    assert P(1, 1).scale(0).is_zero()
    assert -P(1, -2) == P(-1, 2)


# --- poly_mul -----------------------------------------------------------------


def test_mul_hand_expansion():
    assert P(1, 1) * P(1, 1, 1) == P(1, 2, 2, 1)


def test_mul_by_zero_and_one():
    f = P(4, 0, -7, 2)
    assert (f * IntPoly()).is_zero()
    assert f * P(1) == f


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-BIG, BIG), min_size=1, max_size=300),
    st.lists(st.integers(-BIG, BIG), min_size=1, max_size=300),
)
def test_karatsuba_matches_schoolbook(a, b):
    assert _mul_list(a, b)[: len(a) + len(b) - 1] == _schoolbook(a, b)


def test_karatsuba_unbalanced_against_sympy():
    f = gaussian_binomial(30, 12)  # degree 216
    g = P(*range(-20, 20))
    expected = from_sympy(sympy.expand(to_sympy(f).as_expr() * to_sympy(g).as_expr()))
    assert f * g == expected


@given(polys, polys)
def test_degree_of_product(f, g):
    h = f * g
    if f and g:
        assert h.degree == f.degree + g.degree
    else:
        assert h.is_zero()


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


# --- poly_rem -----------------------------------------------------------------


def test_rem_q_to_the_p():
    assert poly_rem(IntPoly.monomial(5), q_integer(5)) == P(1)


def test_rem_low_degree_is_identity():
    f = P(3, -1, 2)
    assert poly_rem(f, q_integer(5)) == f


def test_rem_self_is_zero():
    M = modulus_poly(5, 3)
    assert poly_rem(q_integer(5) ** 3, M).is_zero()


def test_non_monic_rejected():
    with pytest.raises(NonMonicModulusError):
        Modulus(P(1, 2))
    with pytest.raises(NonMonicModulusError):
        Modulus(P(1))
    with pytest.raises(NonMonicModulusError):
        poly_rem(P(1, 2, 3), P(1, 1, 2))


@settings(max_examples=60, deadline=None)
@given(polys, st.sampled_from([5, 7]), st.sampled_from([1, 2, 3]))
def test_rem_against_sympy(f, p, e):
    M = modulus_poly(p, e)
    expected = sympy.rem(to_sympy(f), to_sympy(M.poly))
    r = poly_rem(f, M)
    assert r == from_sympy(expected.as_expr())
    assert r.is_zero() or r.degree < M.degree


@settings(max_examples=60, deadline=None)
@given(polys, st.sampled_from([5, 7, 11]), st.sampled_from([1, 2, 3]))
def test_sparse_reduction_matches_long_division(f, p, e):
    fast = modulus_poly(p, e)
    plain = Modulus(fast.poly)
    assert fast.reduce(f) == plain.reduce(f)


@settings(max_examples=40, deadline=None)
@given(polys, polys, st.sampled_from([5, 7]), st.sampled_from([1, 2, 3]))
def test_rem_is_homomorphism(f, g, p, e):
    M = modulus_poly(p, e)
    assert poly_rem(f * g, M) == poly_rem(poly_rem(f, M) * poly_rem(g, M), M)
    assert poly_rem(f + g, M) == poly_rem(poly_rem(f, M) + poly_rem(g, M), M)


# --- poly_exact_div -----------------------------------------------------------


def test_exact_div_examples():
    assert poly_exact_div(IntPoly.monomial(5) - 1, P(-1, 1)) == q_integer(5)
    assert poly_exact_div(P(-1, 0, 1), P(-1, 1)) == P(1, 1)


def test_inexact_div_carries_remainder():
    with pytest.raises(InexactDivisionError) as info:
        poly_exact_div(P(1, 0, 1), P(-1, 1))
    assert info.value.remainder == P(2)


def test_inexact_when_quotient_not_integral():
    with pytest.raises(InexactDivisionError):
        poly_exact_div(P(1, 1), P(0, 2))


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(P(1), IntPoly())


@given(small_polys, small_polys.filter(bool))
def test_division_round_trip(f, g):
    assert poly_exact_div(f * g, g) == f
    try:
        h = poly_exact_div(f, g)
    except InexactDivisionError:
        return
    assert g * h == f


# --- substitute_power, q_pochhammer, eval_int ---------------------------------


def test_substitute_power_examples():
    assert substitute_power(P(1, 1), 25) == P(1) + IntPoly.monomial(25)
    f = P(2, 0, -3)
    assert substitute_power(f, 1) == f
    assert substitute_power(P(0, 1, 1), 3) == IntPoly.monomial(3) + IntPoly.monomial(6)


@given(small_polys, st.integers(1, 6), st.integers(1, 6))
def test_substitute_power_composes(f, a, b):
    assert substitute_power(substitute_power(f, a), b) == substitute_power(f, a * b)


def test_q_pochhammer_examples():
    assert q_pochhammer(1, 1) == P(1, -1)
    assert q_pochhammer(1, 2) == P(1, -1, -1, 1)
    assert q_pochhammer(7, 0) == P(1)


@pytest.mark.parametrize("a,n", [(1, 4), (3, 5), (11, 4)])
def test_q_pochhammer_degree(a, n):
    assert q_pochhammer(a, n).degree == n * a + n * (n - 1) // 2


def test_eval_int_examples():
    assert eval_int(q_integer(5), 1) == 5
    assert eval_int(gaussian_binomial(4, 2), 1) == 6
    assert eval_int(IntPoly(), 12345) == 0


@given(small_polys, small_polys, st.integers(-10**6, 10**6))
def test_eval_is_multiplicative(f, g, x):
    assert eval_int(f * g, x) == eval_int(f, x) * eval_int(g, x)


# --- rendering ---------------------------------------------------------------


@pytest.mark.parametrize(
    "coeffs,text",
    [
        ((), "0"),
        ((1, 1, 2, 1, 1), "1 + q + 2*q^2 + q^3 + q^4"),
        ((1, -1, -1, 1), "1 - q - q^2 + q^3"),
        ((0, -2, 0, 3), "-2*q + 3*q^3"),
        ((-1,), "-1"),
    ],
)
def test_render(coeffs, text):
    assert render(IntPoly(coeffs)) == text
