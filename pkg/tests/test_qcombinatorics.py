from functools import lru_cache
from math import factorial

import pytest

from qcongruence.congruences import modulus_poly
from qcongruence.polyring import IntPoly, eval_int, poly_exact_div, poly_rem
from qcongruence.qcombinatorics import (
    binomial_int,
    gaussian_binomial,
    gaussian_binomial_mod,
    gaussian_subset_oracle,
    q_factorial,
    q_integer,
)


def P(*c):
    return IntPoly(c)


def test_q_integer():
    assert q_integer(1) == P(1)
    assert q_integer(3) == P(1, 1, 1)
    assert q_integer(0).is_zero()


def test_q_factorial():
    assert q_factorial(0) == P(1)
    assert q_factorial(3) == P(1, 2, 2, 1)
    assert eval_int(q_factorial(4), 1) == 24


@pytest.mark.parametrize("n", range(0, 9))
def test_q_factorial_at_one(n):
    assert eval_int(q_factorial(n), 1) == factorial(n)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1) == P(1, 1)
    assert gaussian_binomial(4, 2) == P(1, 1, 2, 1, 1)
    assert gaussian_binomial(3, 5).is_zero()
    assert gaussian_binomial(3, -1).is_zero()
    assert gaussian_binomial(0, 0) == P(1)


def test_binomial_int():
    assert binomial_int(9, 4) == 126
    assert binomial_int(10, 5) == 252
    assert binomial_int(7, 0) == 1
    assert binomial_int(3, 4) == 0
    assert binomial_int(3, -1) == 0


def test_subset_oracle_examples():
    assert gaussian_subset_oracle(4, 2) == P(1, 1, 2, 1, 1)
    assert gaussian_subset_oracle(6, 6) == P(1)
    assert gaussian_subset_oracle(3, 1) == P(1, 1, 1)


def test_subset_oracle_rejects_large_n():
    with pytest.raises(ValueError):
        gaussian_subset_oracle(17, 3)


def test_oracle_equivalence():
    for n in range(15):
        for k in range(n + 1):
            assert gaussian_subset_oracle(n, k) == gaussian_binomial(n, k), (n, k)


def test_symmetry_and_palindromes():
    for n in range(31):
        for k in range(n + 1):
            g = gaussian_binomial(n, k)
            assert g == gaussian_binomial(n, n - k)
            assert g.degree == k * (n - k)
            assert g.coeffs == g.coeffs[::-1]
            assert min(g.coeffs) > 0


def test_specialization_at_one():
    for n in range(41):
        for k in range(-1, n + 2):
            assert eval_int(gaussian_binomial(n, k), 1) == binomial_int(n, k)


@lru_cache(maxsize=None)
def _second_recurrence(n, k):
    # binom(n,k) = q^(n-k) binom(n-1,k-1) + binom(n-1,k), memoised independently
    if k < 0 or k > n:
        return IntPoly()
    if k == 0 or k == n:
        return P(1)
    return _second_recurrence(n - 1, k - 1).shift(n - k) + _second_recurrence(n - 1, k)


def test_both_pascal_recurrences_agree():
    for n in range(1, 26):
        for k in range(n + 1):
            first = gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shift(k)
            assert first == gaussian_binomial(n, k)
            assert _second_recurrence(n, k) == gaussian_binomial(n, k)


def test_factorial_quotient_definition():
    for n in range(26):
        for k in range(n + 1):
            den = q_factorial(k) * q_factorial(n - k)
            assert poly_exact_div(q_factorial(n), den) == gaussian_binomial(n, k)


def test_mod_examples():
    assert gaussian_binomial_mod(10, 5, modulus_poly(5, 1)) == P(2)
    assert gaussian_binomial_mod(5, 2, modulus_poly(5, 1)).is_zero()
    assert gaussian_binomial_mod(4, 7, modulus_poly(5, 1)).is_zero()


@pytest.mark.parametrize("e", [1, 2, 3])
def test_mod_matches_full_reduction(e):
    M = modulus_poly(5, e)
    for n in range(21):
        for k in range(-1, n + 2):
            r = gaussian_binomial_mod(n, k, M)
            assert r == poly_rem(gaussian_binomial(n, k), M), (n, k, e)
            assert r.is_zero() or r.degree < M.degree


def test_mod_accepts_plain_monic_poly():
    M = q_integer(7) ** 2
    assert gaussian_binomial_mod(20, 8, M) == poly_rem(gaussian_binomial(20, 8), M)
