"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order (index ``i`` holds the
coefficient of ``q**i``) as an immutable tuple of Python ints, always
trimmed so the last entry is nonzero.  The zero polynomial is the empty
tuple and its degree is :data:`NEG_INF`.

Hot loops elsewhere in the package work on plain ``list[int]`` values and
only wrap results in :class:`IntPoly` at the boundary; the ``_list``
helpers in this module are shared for that purpose.
"""

from __future__ import annotations

import functools
from itertools import repeat
from operator import add, sub
from typing import Iterable, Sequence

__all__ = [
    "NEG_INF",
    "IntPoly",
    "Modulus",
    "NonMonicModulusError",
    "InexactDivisionError",
    "poly_rem",
    "poly_exact_div",
    "substitute_power",
    "q_pochhammer",
    "eval_int",
    "KARATSUBA_THRESHOLD",
]

KARATSUBA_THRESHOLD = 32


@functools.total_ordering
class _NegInf:
    """Degree of the zero polynomial.

    Orders below every integer but refuses arithmetic, so it cannot silently
    turn into ``-1`` somewhere downstream.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_NegInf, ())

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


class NonMonicModulusError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    """Raised when a claimed exact division leaves a remainder."""

    def __init__(self, remainder: "IntPoly"):
        super().__init__(f"division is not exact, remainder {remainder}")
        self.remainder = remainder


# ---------------------------------------------------------------------------
# list-level kernels
# ---------------------------------------------------------------------------


def _trim(c: list[int]) -> list[int]:
    while c and not c[-1]:
        c.pop()
    return c


def _add_list(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    out[: len(b)] = map(add, out[: len(b)], b)
    return _trim(out)


def _sub_list(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a)
    if len(out) < len(b):
        out.extend(repeat(0, len(b) - len(out)))
    out[: len(b)] = map(sub, out[: len(b)], b)
    return _trim(out)


def _add_shifted(a: Sequence[int], b: Sequence[int], shift: int) -> list[int]:
    """a + q**shift * b, without trimming (callers with cancellation trim)."""
    out = list(a)
    if not b:
        return out
    end = shift + len(b)
    if len(out) < end:
        out.extend(repeat(0, end - len(out)))
    out[shift:end] = map(add, out[shift:end], b)
    return out


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) > len(b):
        a, b = b, a
    lb = len(b)
    out = [0] * (len(a) + lb - 1)
    for i, x in enumerate(a):
        if x:
            out[i : i + lb] = map(add, out[i : i + lb], [x * y for y in b])
    return out


def _mul_list(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if la < KARATSUBA_THRESHOLD or lb < KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)
    m = max(la, lb) // 2
    if la <= m or lb <= m:
        # unbalanced: split only the long operand
        if la < lb:
            a, b, la, lb = b, a, lb, la
        out = [0] * (la + lb - 1)
        for start in range(0, la, lb):
            part = _mul_list(a[start : start + lb], b)
            out[start : start + len(part)] = map(
                add, out[start : start + len(part)], part
            )
        return out
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _mul_list(a0, b0)
    z2 = _mul_list(a1, b1)
    z1 = _mul_list(_add_list(a0, a1), _add_list(b0, b1))
    z1 = _sub_list(_sub_list(z1, z0), z2)
    out = [0] * (la + lb - 1)
    out[: len(z0)] = z0
    for shift, part in ((m, z1), (2 * m, z2)):
        end = shift + len(part)
        out[shift:end] = map(add, out[shift:end], part)
    return out


def _divmod_monic(f: Sequence[int], g: Sequence[int]) -> tuple[list[int], list[int]]:
    """Euclidean division of f by a monic g; returns (quotient, remainder)."""
    d = len(g) - 1
    r = list(f)
    if len(r) <= d:
        return [], _trim(r)
    quot = [0] * (len(r) - d)
    # only nonzero lower coefficients of g matter
    terms = [(t, c) for t, c in enumerate(g[:d]) if c]
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            quot[i - d] = c
            base = i - d
            for t, gc in terms:
                r[base + t] -= c * gc
    del r[d:]
    return quot, _trim(r)


def _rem_sparse_monic(f: list[int], terms: list[tuple[int, int]], d: int) -> list[int]:
    """In-place remainder of f by q**d + sum(c*q**t for t, c in terms)."""
    for i in range(len(f) - 1, d - 1, -1):
        c = f[i]
        if c:
            base = i - d
            for t, gc in terms:
                f[base + t] -= c * gc
    del f[d:]
    return _trim(f)


# ---------------------------------------------------------------------------
# public value types
# ---------------------------------------------------------------------------


class IntPoly:
    """Immutable dense polynomial in ``q`` with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        _trim(c)
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def _wrap(cls, c: list[int]) -> "IntPoly":
        # trusted constructor for already-trimmed int lists
        obj = cls.__new__(cls)
        obj.coeffs = tuple(c)
        return obj

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPoly":
        if n < 0:
            raise ValueError("negative exponent")
        return cls([0] * n + [c])

    def __getstate__(self):
        return self.coeffs

    def __setstate__(self, state):
        self.coeffs = state

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly._wrap(_add_list(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly._wrap(_sub_list(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return IntPoly._wrap([-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._wrap(_mul_list(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> "IntPoly":
        if not c:
            return IntPoly()
        return IntPoly._wrap([c * x for x in self.coeffs])

    def shift(self, n: int) -> "IntPoly":
        """Multiply by ``q**n``."""
        if n < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPoly._wrap([0] * n + list(self.coeffs))

    def __call__(self, x: int) -> int:
        return eval_int(self, x)

    def max_bits(self) -> int:
        return max((abs(c).bit_length() for c in self.coeffs), default=0)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return render(self)


def render(f: IntPoly, var: str = "q") -> str:
    """Ascending rendering like ``1 - q + 2*q^3``; zero renders as ``0``."""
    parts: list[str] = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


class Modulus:
    """A monic polynomial of degree at least one, used as a Euclidean divisor.

    ``multiple`` optionally names a sparse monic polynomial divisible by
    ``poly``.  When given, remainders are computed as
    ``((f * C) mod multiple) / C`` with ``C = multiple / poly``, which costs
    O(len(f) * (terms of multiple + deg C)) instead of O(len(f) * deg poly).
    ``[p]_q**e`` with multiple ``(q**p - 1)**e`` is the intended use.
    """

    __slots__ = ("poly", "_g", "_terms", "_sparse")

    def __init__(self, poly: IntPoly, multiple: IntPoly | None = None):
        if not isinstance(poly, IntPoly):
            poly = IntPoly(poly)
        if poly.is_zero() or poly.degree < 1:
            raise NonMonicModulusError("modulus must have degree >= 1")
        if poly.leading != 1:
            raise NonMonicModulusError(
                f"modulus must be monic, leading coefficient is {poly.leading}"
            )
        self.poly = poly
        self._g = list(poly.coeffs)
        self._sparse = None
        if multiple is not None:
            if multiple.leading != 1:
                raise NonMonicModulusError("sparse multiple must be monic")
            cof = poly_exact_div(multiple, poly)
            d = multiple.degree
            terms = [(t, c) for t, c in enumerate(multiple.coeffs[:d]) if c]
            self._sparse = (terms, d, list(cof.coeffs))

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __eq__(self, other):
        return isinstance(other, Modulus) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"Modulus({self.poly})"

    def reduce_list(self, f: Sequence[int]) -> list[int]:
        """Remainder of a coefficient list; returns a fresh trimmed list."""
        d = len(self._g) - 1
        if len(f) <= d:
            return _trim(list(f))
        if self._sparse is None:
            return _divmod_monic(f, self._g)[1]
        terms, sd, cof = self._sparse
        # deg(r * C) < deg(multiple), so (f*C mod multiple) == r*C exactly
        g = _mul_list(f, cof) if len(cof) > 1 else list(f)
        g = _rem_sparse_monic(g, terms, sd)
        quot, rest = _divmod_monic(g, cof)
        assert not rest
        return _trim(quot)

    def reduce(self, f: IntPoly) -> IntPoly:
        return IntPoly._wrap(self.reduce_list(f.coeffs))


def _as_modulus(m) -> Modulus:
    if isinstance(m, Modulus):
        return m
    return Modulus(m)


def poly_rem(f: IntPoly, m: Modulus | IntPoly) -> IntPoly:
    """Euclidean remainder of ``f`` by a monic modulus.

    Monicity keeps every step in integer arithmetic; a non-monic modulus
    raises :class:`NonMonicModulusError`.
    """
    return _as_modulus(m).reduce(f)


def poly_exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Return ``h`` with ``f == g * h`` or raise :class:`InexactDivisionError`.

    ``g`` need not be monic; the division is carried out over the integers
    and any non-integral quotient coefficient counts as inexact.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    gc = g.coeffs
    d = len(gc) - 1
    lead = gc[-1]
    r = list(f.coeffs)
    if len(r) <= d:
        if r:
            raise InexactDivisionError(IntPoly._wrap(r))
        return IntPoly()
    quot = [0] * (len(r) - d)
    terms = [(t, c) for t, c in enumerate(gc[:d]) if c]
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if not c:
            continue
        qc, rest = divmod(c, lead)
        if rest:
            raise InexactDivisionError(IntPoly._wrap(_trim(r[: i + 1])))
        quot[i - d] = qc
        r[i] = 0
        base = i - d
        for t, v in terms:
            r[base + t] -= qc * v
    _trim(r)
    if r:
        raise InexactDivisionError(IntPoly._wrap(r))
    return IntPoly._wrap(_trim(quot))


def substitute_power(f: IntPoly, t: int) -> IntPoly:
    """Return ``f(q**t)``."""
    if t < 1:
        raise ValueError("substitution exponent must be positive")
    if t == 1 or len(f.coeffs) <= 1:
        return f
    out = [0] * ((len(f.coeffs) - 1) * t + 1)
    out[::t] = f.coeffs
    return IntPoly._wrap(out)


def q_pochhammer(a: int, n: int) -> IntPoly:
    """``(q**a; q)_n``, the product of ``1 - q**(a+j)`` for ``0 <= j < n``."""
    if a < 0 or n < 0:
        raise ValueError("q_pochhammer takes nonnegative arguments")
    c = [1]
    for j in range(n):
        # multiply by (1 - q**e) in place
        e = a + j
        c = _trim(_add_shifted(c, [-x for x in c], e))
    return IntPoly._wrap(c)


def eval_int(f: IntPoly, x: int) -> int:
    """Exact Horner evaluation at an integer."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc
