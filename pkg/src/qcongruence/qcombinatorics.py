"""q-integers, q-factorials and Gaussian binomial coefficients."""

from __future__ import annotations

import math
from itertools import combinations

from .polyring import IntPoly, Modulus, _add_shifted, _mul_list, _trim

__all__ = [
    "q_integer",
    "q_factorial",
    "gaussian_binomial",
    "gaussian_binomial_mod",
    "binomial_int",
    "gaussian_subset_oracle",
    "SUBSET_ORACLE_MAX_N",
]

SUBSET_ORACLE_MAX_N = 16


def q_integer(n: int) -> IntPoly:
    """``[n]_q = 1 + q + ... + q**(n-1)``; ``[0]_q`` is zero."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return IntPoly._wrap([1] * n)


def q_factorial(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    c = [1]
    for j in range(2, n + 1):
        c = _mul_list(c, [1] * j)
    return IntPoly._wrap(c)


def binomial_int(n: int, k: int) -> int:
    """Classical binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _pascal_rows(n: int, k: int, step):
    """Run the rolling-row Pascal recurrence and return entry ``k`` of row ``n``.

    ``step(left, right, j)`` must return ``left + q**j * right`` in whatever
    representation the caller keeps.  Only the window of columns that can
    still reach column ``k`` is updated.
    """
    row: list[list[int]] = [[1]] + [[] for _ in range(k)]
    for i in range(1, n + 1):
        lo = max(1, k - (n - i))
        for j in range(min(i, k), lo - 1, -1):
            row[j] = step(row[j - 1], row[j], j)
    return row[k]


def gaussian_binomial(n: int, k: int) -> IntPoly:
    """Gaussian binomial coefficient ``binom(n, k)_q``.

    Built from ``binom(i, j) = binom(i-1, j-1) + q**j * binom(i-1, j)``
    with a single rolling row; out-of-range ``k`` gives zero.
    """
    if n < 0:
        raise ValueError("gaussian_binomial needs n >= 0")
    if k < 0 or k > n:
        return IntPoly()
    k = min(k, n - k)  # symmetric, and keeps the row short
    if k == 0:
        return IntPoly.constant(1)
    return IntPoly._wrap(
        _pascal_rows(n, k, lambda left, right, j: _add_shifted(left, right, j))
    )


def gaussian_binomial_mod(n: int, k: int, modulus: Modulus | IntPoly) -> IntPoly:
    """``binom(n, k)_q`` reduced by a monic modulus, reducing as it goes.

    Every stored intermediate is a canonical remainder, so degrees stay
    below ``deg(modulus)`` throughout.
    """
    return gaussian_binomial_mod_stats(n, k, modulus)[0]


def gaussian_binomial_mod_stats(n: int, k: int, modulus) -> tuple[IntPoly, int]:
    """Like :func:`gaussian_binomial_mod`, also returning the peak coefficient bit-length."""
    if not isinstance(modulus, Modulus):
        modulus = Modulus(modulus)
    if n < 0:
        raise ValueError("gaussian_binomial_mod needs n >= 0")
    if k < 0 or k > n:
        return IntPoly(), 0
    k = min(k, n - k)
    if k == 0:
        return modulus.reduce(IntPoly.constant(1)), 1
    reduce_list = modulus.reduce_list
    peak = 0

    def step(left, right, j):
        nonlocal peak
        out = _trim(_add_shifted(left, reduce_list(_add_shifted([], right, j)), 0))
        if out:
            peak = max(peak, max(abs(min(out)), max(out)).bit_length())
        return out

    result = reduce_list(_pascal_rows(n, k, step))
    return IntPoly._wrap(result), peak


def gaussian_subset_oracle(n: int, k: int) -> IntPoly:
    """Gaussian binomial by brute force over ``k``-subsets of ``range(n)``.

    Each subset contributes ``q**(sum(S) - k*(k-1)/2)``, i.e. the size of
    the partition fitting in a ``k x (n-k)`` box that it encodes.
    Exponential, so ``n`` is capped at :data:`SUBSET_ORACLE_MAX_N`.
    """
    if n > SUBSET_ORACLE_MAX_N:
        raise ValueError(f"subset oracle limited to n <= {SUBSET_ORACLE_MAX_N}")
    if n < 0 or k < 0:
        raise ValueError("subset oracle needs nonnegative arguments")
    if k > n:
        return IntPoly()
    base = k * (k - 1) // 2
    coeffs = [0] * (k * (n - k) + 1)
    for subset in combinations(range(n), k):
        coeffs[sum(subset) - base] += 1
    return IntPoly(coeffs)
