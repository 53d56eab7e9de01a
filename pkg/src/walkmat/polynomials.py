"""Univariate integer polynomials, Sylvester resultants and Chebyshev families."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .exact_linalg import det_bareiss


class IntPoly:
    """Immutable polynomial with integer coefficients, lowest degree first.

    Trailing zeros are stripped on construction, so ``coeffs`` is canonical and
    the zero polynomial has an empty coefficient tuple (degree ``-1``).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` stands in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * x for x in self.coeffs)

    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions and floats alike."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def dilate(self, t: int) -> "IntPoly":
        """Return ``p(t*x)``."""
        return IntPoly(c * t**k for k, c in enumerate(self.coeffs))


def _coerce(p: "IntPoly | int") -> IntPoly:
    return IntPoly((p,)) if isinstance(p, int) else p


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def poly_scale(p: IntPoly, c: int) -> IntPoly:
    return p.scale(c)


def poly_eval(p: IntPoly, x: int) -> int:
    return p(x)


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    """Sylvester matrix of order ``deg f + deg g``; rows hold shifted coefficients, highest first."""
    n, m = f.degree, g.degree
    size = n + m
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - m - 1 - i))
    return rows


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant ``Res_x(f, g)`` as the determinant of the Sylvester matrix.

    Two constants give 1 (empty matrix); a nonzero constant ``c`` against ``f``
    gives ``c ** deg f``.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    return det_bareiss(sylvester_matrix(f, g))


@lru_cache(maxsize=None)
def chebyshev_u(n: int) -> IntPoly:
    """Chebyshev polynomial of the second kind, ``U_{k+1} = 2x U_k - U_{k-1}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IntPoly((1,))
    if n == 1:
        return IntPoly((0, 2))
    return IntPoly((0, 2)) * chebyshev_u(n - 1) - chebyshev_u(n - 2)


@lru_cache(maxsize=None)
def chebyshev_s(n: int) -> IntPoly:
    """Monic renormalised Chebyshev polynomial ``S_n(x) = U_n(x/2)``.

    Equal to the characteristic polynomial of the path on ``n`` vertices.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IntPoly((1,))
    if n == 1:
        return IntPoly((0, 1))
    return IntPoly.x() * chebyshev_s(n - 1) - chebyshev_s(n - 2)


def s_sum(m: int) -> IntPoly:
    """``S_0 + S_1 + ... + S_{m-1}``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    total = IntPoly.zero()
    for k in range(m):
        total = total + chebyshev_s(k)
    return total


def u_sum(m: int) -> IntPoly:
    """``U_0 + U_1 + ... + U_{m-1}``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    total = IntPoly.zero()
    for k in range(m):
        total = total + chebyshev_u(k)
    return total


def weighted_power_sum(c: Sequence[int], P: IntPoly, Q: IntPoly) -> IntPoly:
    """``sum_k c[k] * P**k * Q**(n-k)`` with ``n = len(c) - 1``.

    With ``c`` the coefficients of a characteristic polynomial this is
    ``Q**n * phi(P/Q)`` cleared of denominators.
    """
    n = len(c) - 1
    p_pows = [IntPoly.one()]
    q_pows = [IntPoly.one()]
    for _ in range(n):
        p_pows.append(p_pows[-1] * P)
        q_pows.append(q_pows[-1] * Q)
    total = IntPoly.zero()
    for k, ck in enumerate(c):
        if ck:
            total = total + (p_pows[k] * q_pows[n - k]).scale(ck)
    return total
