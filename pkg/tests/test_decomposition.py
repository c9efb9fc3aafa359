import pytest

from qcongruence.congruences import CaseError, modulus_poly, twelfth
from qcongruence.decomposition import (
    _gb,
    closing_identity,
    proof_decomposition,
)
from qcongruence.polyring import IntPoly
from qcongruence.qcombinatorics import gaussian_binomial


def test_lemma_split_sums_exactly():
    d = proof_decomposition(5, 3, 1)
    assert d.total() == gaussian_binomial(15, 5)


def test_identity_instance_k5_s2():
    # C(5,3) C(3,2) = 4*3 + 6*1 + 3*2 + 3*1 + 3
    assert closing_identity(5, 2) == (30, 30)


@pytest.mark.parametrize("k", range(2, 12))
@pytest.mark.parametrize("s", range(1, 8))
def test_closing_identity_holds(k, s):
    lhs, rhs = closing_identity(k, s)
    assert lhs == rhs


def test_l4_closed_form_k3_s2():
    p = 5
    d = proof_decomposition(p, 3, 2)
    # -C(1,1) (p^2-1)/12 (1-q)^2 [p]_q^2, where (1-q)^2 [p]_q^2 = (q^p-1)^2
    expected = ((IntPoly.monomial(p) - 1) ** 2).scale(-twelfth(p))
    assert d.closed_forms[3] == expected
    assert modulus_poly(p, 3).reduce(d.l4 - expected).is_zero()


@pytest.mark.parametrize("p", [5, 7])
def test_every_piece_matches_closed_form(p):
    for k in range(2, 6):
        for s in range(1, k):
            d = proof_decomposition(p, k, s)
            assert d.total() == gaussian_binomial(k * p, s * p)
            assert all(r.is_zero() for r in d.closed_form_residues())
            assert d.identity_ok


def test_lemma_split_l4_summands_vanish():
    # each double-sum term carries three factors divisible by [p]_q
    p, k = 5, 4
    M = modulus_poly(p, 3)
    for i in range(1, p):
        for j in range(1, p - i):
            term = _gb(p, i) * _gb((k - 2) * p, p - i - j) * _gb(p, j)
            assert M.reduce(term).is_zero()


def test_closed_forms_are_not_vacuous():
    # the pieces do not vanish individually; only their congruences hold
    d = proof_decomposition(7, 4, 2)
    M = modulus_poly(7, 3)
    assert not M.reduce(d.l2).is_zero()
    assert not M.reduce(d.l3).is_zero()


@pytest.mark.parametrize("p,k,s", [(5, 2, 2), (5, 1, 1), (5, 3, 0), (3, 3, 1), (9, 3, 1)])
def test_rejects_outside_induction_range(p, k, s):
    with pytest.raises(CaseError):
        proof_decomposition(p, k, s)
