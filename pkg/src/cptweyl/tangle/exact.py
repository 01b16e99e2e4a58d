"""Exact complex rationals and rational polynomial helpers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactcore import DyadicGaussian


class GaussQ:
    """Complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, v) -> "GaussQ":
        if isinstance(v, GaussQ):
            return v
        if isinstance(v, DyadicGaussian):
            return cls(v.real, v.imag)
        return cls(v)

    def __add__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __mul__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, q):
        q = Fraction(q)
        return GaussQ(self.re / q, self.im / q)

    def conjugate(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, DyadicGaussian, GaussQ)):
            o = GaussQ.of(o)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussQ({self.re})"
        return f"GaussQ({self.re}, {self.im})"


Matrix = list[list[GaussQ]]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), GaussQ()) for j in range(n)] for i in range(n)]


def trace(a: Matrix) -> GaussQ:
    return sum((a[i][i] for i in range(len(a))), GaussQ())


def det(a: Matrix) -> GaussQ:
    """Determinant by cofactor expansion (matrices here are at most 4x4)."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = GaussQ()
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def char_poly(a: Matrix) -> list[GaussQ]:
    """Coefficients of det(t I - A), highest degree first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [GaussQ(1)]
    m = [[GaussQ() for _ in range(n)] for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        m = mat_mul(a, m)
        for i in range(n):
            m[i][i] = m[i][i] + c_prev
        am = mat_mul(a, m)
        coeffs.append(-trace(am) / k)
    return coeffs


# -- rational polynomials, highest degree first ------------------------------

Poly = list[Fraction]


def _trim(p: Poly) -> Poly:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a, b = _trim(list(a)), _trim(list(b))
    if len(b) == 1 and b[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(q)):
        f = r[i] / b[0]
        q[i] = f
        for j, bj in enumerate(b):
            r[i + j] -= f * bj
    return q, _trim(r[len(q):] or [Fraction(0)])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, poly_divmod(a, b)[1]
    return [c / a[0] for c in a]


def poly_deriv(p: Poly) -> Poly:
    n = len(p) - 1
    if n == 0:
        return [Fraction(0)]
    return [c * (n - i) for i, c in enumerate(p[:-1])]


def poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    a = [Fraction(0)] * (n - len(a)) + list(a)
    b = [Fraction(0)] * (n - len(b)) + list(b)
    return _trim([x - y for x, y in zip(a, b)])


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lead * prod(f_i ** i)`` with squarefree, coprime ``f_i``."""
    p = _trim([Fraction(c) for c in p])
    p = [c / p[0] for c in p]
    if len(p) == 1:
        return []
    dp = poly_deriv(p)
    a = poly_gcd(p, dp)
    b = poly_divmod(p, a)[0]
    c = poly_divmod(dp, a)[0]
    d = poly_sub(c, poly_deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = poly_gcd(b, d) if not (len(d) == 1 and d[0] == 0) else b
        if len(a) > 1:
            out.append((a, i))
        b = poly_divmod(b, a)[0]
        c = poly_divmod(d, a)[0] if not (len(d) == 1 and d[0] == 0) else [Fraction(0)]
        d = poly_sub(c, poly_deriv(b))
        i += 1
    return out


def poly_eval(p: Sequence, x):
    acc = 0 * x
    for c in p:
        acc = acc * x + c
    return acc
