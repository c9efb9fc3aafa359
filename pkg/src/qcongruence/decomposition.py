"""The four-sum split behind the inductive proof of Straub's congruence.

Applying q-Chu-Vandermonde twice to ``binom(kp, sp)_q`` (peeling off one
block of ``p`` and then another) splits it into four pieces:

* ``L1`` - the two boundary terms of the outer sum,
* ``L2`` - inner boundary ``j = 0``,
* ``L3`` - inner boundary ``j = p`` (for ``s = 1``: the terms ``binom(p,i) binom(p,p-i)``),
* ``L4`` - the remaining double sum.

Each piece has a closed form modulo ``[p]_q**3`` that follows from the
congruence at smaller ``k``; :func:`proof_decomposition` builds the pieces
exactly and the closed forms alongside, so both the exact split and each
modular step can be checked instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .congruences import CaseError, check_prime_for, modulus_poly, twelfth
from .polyring import IntPoly, substitute_power
from .qcombinatorics import binomial_int, gaussian_binomial


@dataclass(frozen=True)
class ProofDecomposition:
    p: int
    k: int
    s: int
    l1: IntPoly
    l2: IntPoly
    l3: IntPoly
    l4: IntPoly
    closed_forms: tuple[IntPoly, IntPoly, IntPoly, IntPoly]
    identity_ok: bool

    @property
    def pieces(self) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
        return (self.l1, self.l2, self.l3, self.l4)

    def total(self) -> IntPoly:
        return self.l1 + self.l2 + self.l3 + self.l4

    def closed_form_residues(self, power: int = 3) -> list[IntPoly]:
        """Residues of ``L_i - closed_form_i`` modulo ``[p]_q**power``."""
        M = modulus_poly(self.p, power)
        return [M.reduce(l - c) for l, c in zip(self.pieces, self.closed_forms)]


def closing_identity(k: int, s: int) -> tuple[int, int]:
    """Both sides of the integer identity that closes the induction step.

    ``C(k,s+1) C(s+1,2)`` against
    ``C(k-1,s+1) C(s+1,2) + C(k-1,s) C(s,2) + C(k-2,s) s + C(k-2,s-1) (s-1) + C(k-2,s-1)``.
    """
    b = binomial_int
    lhs = b(k, s + 1) * b(s + 1, 2)
    rhs = (
        b(k - 1, s + 1) * b(s + 1, 2)
        + b(k - 1, s) * b(s, 2)
        + b(k - 2, s) * s
        + b(k - 2, s - 1) * (s - 1)
        + b(k - 2, s - 1)
    )
    return lhs, rhs


@lru_cache(maxsize=256)
def _gb(n: int, k: int) -> IntPoly:
    return gaussian_binomial(n, k)


def _term(exponent: int, *factors: IntPoly) -> IntPoly:
    prod = IntPoly.constant(1)
    for f in factors:
        if f.is_zero():
            return IntPoly()
        prod = prod * f
    if exponent < 0:
        raise ArithmeticError("nonzero term with a negative q-exponent")
    return prod.shift(exponent)


def _split_lemma(p: int, k: int):
    # s = 1: inner sum over j runs to p - i only
    L1 = _gb((k - 1) * p, p) + IntPoly.monomial((k - 1) * p * p)
    L2 = IntPoly()
    L3 = IntPoly()
    L4 = IntPoly()
    for i in range(1, p):
        L2 = L2 + _term(i * ((k - 2) * p + i), _gb(p, i), _gb((k - 2) * p, p - i))
        L3 = L3 + _term(p * p * (k - 2) + i * i, _gb(p, i), _gb(p, p - i))
        for j in range(1, p - i):
            e = i * ((k - 2) * p + i) + j * ((k - 3) * p + i + j)
            L4 = L4 + _term(e, _gb(p, i), _gb((k - 2) * p, p - i - j), _gb(p, j))
    return L1, L2, L3, L4


def _split_theorem(p: int, k: int, s: int):
    L1 = _gb((k - 1) * p, s * p) + _gb((k - 1) * p, (s - 1) * p).shift((k - s) * p * p)
    L2 = IntPoly()
    L3 = IntPoly()
    L4 = IntPoly()
    for i in range(1, p):
        L2 = L2 + _term(
            i * ((k - s - 1) * p + i), _gb(p, i), _gb((k - 2) * p, s * p - i)
        )
        L3 = L3 + _term(
            (p + i) * ((k - 1 - s) * p + i),
            _gb(p, i),
            _gb((k - 2) * p, (s - 1) * p - i),
        )
        for j in range(1, p):
            e = i * ((k - 1 - s) * p + i) + j * ((k - 2 - s) * p + i + j)
            L4 = L4 + _term(e, _gb(p, i), _gb((k - 2) * p, s * p - i - j), _gb(p, j))
    return L1, L2, L3, L4


def _closed_forms(p: int, k: int, s: int):
    b = binomial_int
    T = ((IntPoly.monomial(p) - 1) ** 2).scale(twelfth(p))
    main = substitute_power(gaussian_binomial(k, s), p * p)
    if s == 1:
        return (
            main - T.scale(b(k - 1, 2)),
            T.scale(-(k - 2)),
            -T,
            IntPoly(),
        )
    return (
        main - T.scale(b(k - 1, s + 1) * b(s + 1, 2) + b(k - 1, s) * b(s, 2)),
        T.scale(-b(k - 2, s) * s),
        T.scale(-b(k - 2, s - 1) * (s - 1)),
        T.scale(-b(k - 2, s - 1)),
    )


def proof_decomposition(p: int, k: int, s: int) -> ProofDecomposition:
    """Exact four-sum split of ``binom(kp, sp)_q`` with its closed forms.

    Valid for ``k > s >= 1`` and ``k >= 2``; ``s = 1`` uses the split from
    the ``binom(kp, p)`` induction, ``s >= 2`` the general one.
    """
    check_prime_for("straub", p)
    if not (k > s >= 1 and k >= 2):
        raise CaseError(f"decomposition needs k > s >= 1 and k >= 2, got k={k}, s={s}")
    if s == 1:
        pieces = _split_lemma(p, k)
    else:
        pieces = _split_theorem(p, k, s)
    lhs, rhs = closing_identity(k, s)
    return ProofDecomposition(
        p, k, s, *pieces, closed_forms=_closed_forms(p, k, s), identity_ok=lhs == rhs
    )
