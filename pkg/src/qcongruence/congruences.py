"""Instance-by-instance verification of binomial congruences and their q-analogues.

Every verifier returns a :class:`VerificationReport` whose ``passed`` flag
is true exactly when the residue (left side minus right side, reduced by the
relevant modulus) is the zero polynomial or zero integer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .polyring import (
    NEG_INF,
    InexactDivisionError,
    IntPoly,
    Modulus,
    poly_exact_div,
    poly_rem,
    q_pochhammer,
    substitute_power,
)
from .primes import is_prime
from .qcombinatorics import (
    binomial_int,
    gaussian_binomial,
    gaussian_binomial_mod,
    q_integer,
)

THEOREMS = (
    "lucas",
    "ljunggren",
    "wolstenholme",
    "glaisher",
    "q_lucas",
    "q_vandermonde",
    "straub",
    "shi_pan",
    "andrews",
    "pan",
)
CLASSICAL = ("lucas", "ljunggren", "wolstenholme", "glaisher")
NEEDS_P_GE_5 = frozenset(
    {"straub", "shi_pan", "ljunggren", "wolstenholme", "glaisher", "pan"}
)
# theorems whose left side is a Gaussian binomial, so full/modular both apply
BINOMIAL_LHS = frozenset({"straub", "pan", "q_lucas"})

PAPER_POWER = {
    "lucas": 1,
    "ljunggren": 3,
    "wolstenholme": 3,
    "glaisher": 3,
    "q_lucas": 1,
    "q_vandermonde": 0,
    "straub": 3,
    "shi_pan": 1,
    "andrews": 1,
    "pan": 3,
}

# above this top index the full polynomial gets too large to be worth building
FULL_STRATEGY_MAX_N = 200
STRATEGIES = ("full", "modular")


class CaseError(ValueError):
    """A verification case violates the hypotheses of its theorem."""


def check_prime_for(theorem: str, p: int) -> None:
    """Raise :class:`CaseError` unless ``p`` satisfies the theorem's hypothesis."""
    if theorem == "q_vandermonde":
        return
    if not is_prime(p):
        raise CaseError(f"{theorem}: p={p} is not prime")
    if theorem in NEEDS_P_GE_5 and p < 5:
        raise CaseError(f"{theorem}: requires a prime p >= 5, got {p}")
    if theorem == "andrews" and p == 2:
        raise CaseError("andrews: requires an odd prime")


def twelfth(p: int) -> int:
    """``(p**2 - 1) / 12``, integral for primes ``p >= 5``."""
    num = p * p - 1
    if num % 12:
        raise CaseError(f"(p^2-1)/12 is not an integer for p={p}")
    return num // 12


def andrews_constant(p: int) -> int:
    """``p (p**2 - 1) / 24``, integral for odd ``p``."""
    num = p * (p * p - 1)
    if num % 24:
        raise CaseError(f"p(p^2-1)/24 is not an integer for p={p}")
    return num // 24


@dataclass(frozen=True, order=True)
class CongruenceCase:
    """One verification instance.

    Field meaning depends on ``theorem``: ``lucas`` and ``q_lucas`` store the
    top index in ``k`` and the bottom index in ``s``; ``q_vandermonde`` stores
    ``(m, n, h)`` as ``(m, k, s)`` with ``p = 0``; ``glaisher`` and ``andrews``
    use ``m``.  ``power`` is the exponent ``e`` of the modulus (``p**e`` or
    ``[p]_q**e``); ``0`` marks an exact identity.
    """

    theorem: str
    p: int
    k: int = 0
    s: int = 0
    m: int = 0
    power: int = -1

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise CaseError(f"unknown theorem {self.theorem!r}")
        if self.power == -1:
            object.__setattr__(self, "power", PAPER_POWER[self.theorem])
        if self.theorem == "q_vandermonde":
            if self.power != 0:
                raise CaseError("q_vandermonde is an exact identity (power 0)")
        elif self.power < 1:
            raise CaseError("modulus power must be >= 1")
        if min(self.k, self.s, self.m) < 0:
            raise CaseError("k, s, m must be nonnegative")
        check_prime_for(self.theorem, self.p)
        if self.theorem in ("straub", "pan", "shi_pan"):
            twelfth(self.p)
        if self.theorem == "andrews":
            andrews_constant(self.p)
            if self.m < 1:
                raise CaseError("andrews: requires m >= 1")

    @property
    def paper_power(self) -> bool:
        return self.power == PAPER_POWER[self.theorem]

    def label(self) -> str:
        return (
            f"{self.theorem} p={self.p} k={self.k} s={self.s} "
            f"m={self.m} e={self.power}"
        )


@dataclass(frozen=True)
class VerificationReport:
    case: CongruenceCase
    passed: bool
    residue_degree: int | None  # None when the residue is zero
    lhs_degree: int | None  # None when the left side is zero
    elapsed_ms: int
    strategy: str
    note: str = ""
    residue: IntPoly | None = field(default=None, compare=False, repr=False)

    def sort_key(self):
        c = self.case
        return (c.theorem, c.p, c.k, c.s, c.m, c.power, self.strategy)


def _deg(f: IntPoly) -> int | None:
    d = f.degree
    return None if d is NEG_INF else d


def _report(case, residue: IntPoly, lhs_degree, t0, strategy="full", note=""):
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return VerificationReport(
        case=case,
        passed=residue.is_zero(),
        residue_degree=_deg(residue),
        lhs_degree=lhs_degree,
        elapsed_ms=elapsed_ms,
        strategy=strategy,
        note=note if case.paper_power else (note + " non-paper-power").strip(),
        residue=residue,
    )


@lru_cache(maxsize=None)
def modulus_poly(p: int, e: int) -> Modulus:
    """``[p]_q**e`` as a :class:`Modulus`, monic of degree ``e*(p-1)``."""
    if p < 2 or e < 1:
        raise ValueError("modulus_poly needs p >= 2 and e >= 1")
    base = q_integer(p) ** e
    helper = (IntPoly.monomial(p) - 1) ** e
    return Modulus(base, helper)


def congruent(f: IntPoly, g: IntPoly, modulus) -> tuple[bool, IntPoly]:
    residue = poly_rem(f - g, modulus)
    return residue.is_zero(), residue


def resolve_strategy(n: int, strategy: str = "auto") -> str:
    if strategy == "auto":
        return "full" if n <= FULL_STRATEGY_MAX_N else "modular"
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    return strategy


def binomial_lhs(n: int, k: int, modulus: Modulus, strategy: str = "auto"):
    """Reduced ``binom(n, k)_q`` plus its unreduced degree and the strategy used."""
    used = resolve_strategy(n, strategy)
    if used == "full":
        full = gaussian_binomial(n, k)
        return modulus.reduce(full), _deg(full), used
    lhs_degree = k * (n - k) if 0 <= k <= n else None
    return gaussian_binomial_mod(n, k, modulus), lhs_degree, used


# ---------------------------------------------------------------------------
# q-Chu-Vandermonde and q-Lucas
# ---------------------------------------------------------------------------


def vandermonde_sum(m: int, n: int, h: int, weighted: bool = True) -> IntPoly:
    """``sum_k binom(m, h-k)_q binom(n, k)_q q**(k(m-h+k))``.

    With ``weighted=False`` the q-power is dropped, giving the convolution
    without weights, which is not an identity.
    """
    total = IntPoly()
    for k in range(h + 1):
        a = gaussian_binomial(m, h - k)
        b = gaussian_binomial(n, k)
        if a.is_zero() or b.is_zero():
            continue
        term = a * b
        if weighted:
            term = term.shift(k * (m - h + k))
        total = total + term
    return total


def verify_q_vandermonde(m: int, n: int, h: int, weighted: bool = True):
    t0 = time.perf_counter()
    case = CongruenceCase("q_vandermonde", 0, k=n, s=h, m=m, power=0)
    lhs = vandermonde_sum(m, n, h, weighted)
    residue = lhs - gaussian_binomial(m + n, h)
    return _report(case, residue, _deg(lhs), t0, note="" if weighted else "unweighted")


def verify_q_lucas(p: int, a: int, b: int, r: int, s: int, *, power=1, strategy="auto"):
    """``binom(ap+b, rp+s)_q == C(a, r) binom(b, s)_q  (mod [p]_q**power)``."""
    if not (0 <= b < p and 0 <= s < p):
        raise CaseError("q_lucas digits b, s must satisfy 0 <= b, s <= p-1")
    if a < 0 or r < 0:
        raise CaseError("q_lucas needs a, r >= 0")
    t0 = time.perf_counter()
    n, k = a * p + b, r * p + s
    case = CongruenceCase("q_lucas", p, k=n, s=k, power=power)
    M = modulus_poly(p, power)
    lhs, lhs_degree, used = binomial_lhs(n, k, M, strategy)
    rhs = gaussian_binomial(b, s).scale(binomial_int(a, r))
    return _report(case, poly_rem(lhs - rhs, M), lhs_degree, t0, used)


# ---------------------------------------------------------------------------
# Straub and Pan
# ---------------------------------------------------------------------------


def _qp_minus_one_sq(p: int) -> IntPoly:
    return (IntPoly.monomial(p) - 1) ** 2


def straub_rhs(p: int, k: int, s: int) -> IntPoly:
    """``binom(k,s)_{q^{p^2}} - C(k,s+1) C(s+1,2) (p^2-1)/12 (q^p-1)^2``."""
    check_prime_for("straub", p)
    c = binomial_int(k, s + 1) * binomial_int(s + 1, 2) * twelfth(p)
    main = substitute_power(gaussian_binomial(k, s), p * p)
    return main - _qp_minus_one_sq(p).scale(c)


def pan_rhs(p: int, k: int, s: int) -> IntPoly:
    """``q^{(k-s) s C(p,2)} (binom(k,s)_{q^p} + k C(k,s+1) C(s+1,2) (p^2-1)/12 (q^p-1)^2)``."""
    check_prime_for("pan", p)
    c = k * binomial_int(k, s + 1) * binomial_int(s + 1, 2) * twelfth(p)
    inner = substitute_power(gaussian_binomial(k, s), p) + _qp_minus_one_sq(p).scale(c)
    shift = (k - s) * s * binomial_int(p, 2)
    if shift < 0:
        # s > k: the bracket is zero anyway
        assert inner.is_zero()
        return inner
    return inner.shift(shift)


def _verify_binomial_congruence(theorem, rhs_fn, p, k, s, power, strategy, rhs):
    t0 = time.perf_counter()
    case = CongruenceCase(theorem, p, k=k, s=s, power=power)
    M = modulus_poly(p, power)
    lhs, lhs_degree, used = binomial_lhs(k * p, s * p, M, strategy)
    if rhs is None:
        rhs = rhs_fn(p, k, s)
    return _report(case, poly_rem(lhs - rhs, M), lhs_degree, t0, used)


def verify_straub(p: int, k: int, s: int, *, power=3, strategy="auto", rhs=None):
    """``binom(kp, sp)_q == straub_rhs(p, k, s)  (mod [p]_q**power)``.

    ``rhs`` substitutes a different right side, used for mutation checks.
    """
    return _verify_binomial_congruence("straub", straub_rhs, p, k, s, power, strategy, rhs)


def verify_pan(p: int, k: int, s: int, *, power=3, strategy="auto", rhs=None):
    return _verify_binomial_congruence("pan", pan_rhs, p, k, s, power, strategy, rhs)


# ---------------------------------------------------------------------------
# Shi-Pan sum and Andrews
# ---------------------------------------------------------------------------


def shi_pan_cleared(p: int) -> IntPoly:
    """Shi-Pan sum with denominators cleared by ``prod_{j<p} (1-q^j)^2``.

    Returns ``sum_i q^i prod_{j != i} (1-q^j)^2 + (p^2-1)/12 prod_j (1-q^j)^2``.
    """
    full = q_pochhammer(1, p - 1) ** 2
    total = full.scale(twelfth(p))
    for i in range(1, p):
        one_minus = IntPoly.constant(1) - IntPoly.monomial(i)
        total = total + poly_exact_div(full, one_minus * one_minus).shift(i)
    return total


def verify_shi_pan(p: int, *, power=1):
    t0 = time.perf_counter()
    case = CongruenceCase("shi_pan", p, power=power)
    lhs = shi_pan_cleared(p)
    return _report(case, poly_rem(lhs, modulus_poly(p, power)), _deg(lhs), t0)


def andrews_parts(p: int, m: int) -> tuple[IntPoly, IntPoly, int]:
    """Numerator N, denominator D and constant c of Andrews' congruence."""
    one = IntPoly.constant(1)
    num = q_pochhammer(m * p + 1, p - 1) - q_pochhammer(1, p - 1).shift(
        m * p * (p - 1) // 2
    )
    den = (one - IntPoly.monomial((m + 1) * p)) * (one - IntPoly.monomial(m * p))
    return num, den, andrews_constant(p)


def verify_andrews(p: int, m: int, *, power=1):
    """``N/D == p(p^2-1)/24  (mod [p]_q**power)`` checked as ``(N - cD)/D == 0``.

    The quotient must be an exact polynomial division; if it is not, the
    report fails with note ``divisibility-violation`` and the division
    remainder as residue.
    """
    t0 = time.perf_counter()
    case = CongruenceCase("andrews", p, m=m, power=power)
    num, den, c = andrews_parts(p, m)
    try:
        quot = poly_exact_div(num - den.scale(c), den)
    except InexactDivisionError as exc:
        return _report(case, exc.remainder, _deg(num), t0, note="divisibility-violation")
    return _report(case, poly_rem(quot, modulus_poly(p, power)), _deg(num), t0)


# ---------------------------------------------------------------------------
# classical integer congruences
# ---------------------------------------------------------------------------


def _digits(n: int, p: int) -> list[int]:
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def lucas_product(n: int, m: int, p: int) -> int:
    dn, dm = _digits(n, p), _digits(m, p)
    if len(dm) > len(dn):
        return 0
    dm += [0] * (len(dn) - len(dm))
    prod = 1
    for b, c in zip(dn, dm):
        prod *= binomial_int(b, c)
    return prod


def verify_classical(family: str, p: int, *, n=0, m=0, k=0, s=0, power=None):
    """Integer congruences.

    * ``lucas``: ``C(n, m) == prod C(b_i, c_i)  (mod p)`` over base-p digits.
    * ``ljunggren``: ``C(kp, sp) == C(k, s)  (mod p^3)``.
    * ``wolstenholme``: ``C(2p-1, p-1) == 1  (mod p^3)``.
    * ``glaisher``: ``C(mp+p-1, p-1) == 1`` and
      ``prod_{j<p} (mp+j) == (p-1)!``, both ``(mod p^3)``.
    """
    if family not in CLASSICAL:
        raise CaseError(f"unknown classical family {family!r}")
    if power is None:
        power = PAPER_POWER[family]
    t0 = time.perf_counter()
    if family == "lucas":
        case = CongruenceCase(family, p, k=n, s=m, power=power)
    elif family == "glaisher":
        case = CongruenceCase(family, p, m=m, power=power)
    else:
        case = CongruenceCase(family, p, k=k, s=s, power=power)
    mod = p**power

    if family == "lucas":
        lhs = binomial_int(n, m)
        diffs = [lhs - lucas_product(n, m, p)]
    elif family == "ljunggren":
        lhs = binomial_int(k * p, s * p)
        diffs = [lhs - binomial_int(k, s)]
    elif family == "wolstenholme":
        lhs = binomial_int(2 * p - 1, p - 1)
        diffs = [lhs - 1]
    else:
        lhs = binomial_int(m * p + p - 1, p - 1)
        prod = 1
        for j in range(1, p):
            prod *= m * p + j
        fact = 1
        for j in range(1, p):
            fact *= j
        diffs = [lhs - 1, prod - fact]
    residue = next((d % mod for d in diffs if d % mod), 0)
    return _report(case, IntPoly.constant(residue), 0 if lhs else None, t0)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def run_case(case: CongruenceCase, strategy: str = "auto") -> VerificationReport:
    """Verify one case; ``strategy`` only matters for Gaussian-binomial left sides."""
    t = case.theorem
    if t == "straub":
        return verify_straub(case.p, case.k, case.s, power=case.power, strategy=strategy)
    if t == "pan":
        return verify_pan(case.p, case.k, case.s, power=case.power, strategy=strategy)
    if t == "q_lucas":
        a, b = divmod(case.k, case.p)
        r, s = divmod(case.s, case.p)
        return verify_q_lucas(case.p, a, b, r, s, power=case.power, strategy=strategy)
    if t == "q_vandermonde":
        return verify_q_vandermonde(case.m, case.k, case.s)
    if t == "shi_pan":
        return verify_shi_pan(case.p, power=case.power)
    if t == "andrews":
        return verify_andrews(case.p, case.m, power=case.power)
    if t == "lucas":
        return verify_classical(t, case.p, n=case.k, m=case.s, power=case.power)
    if t == "glaisher":
        return verify_classical(t, case.p, m=case.m, power=case.power)
    return verify_classical(t, case.p, k=case.k, s=case.s, power=case.power)
