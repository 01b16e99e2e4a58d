"""Dyadic Gaussian scalars: (a + b i) / 2**k with integer a, b."""

from __future__ import annotations

from fractions import Fraction
from typing import Union


def _strip_twos(re: int, im: int, k: int) -> tuple[int, int, int]:
    while k > 0 and not (re & 1) and not (im & 1):
        re >>= 1
        im >>= 1
        k -= 1
    return re, im, k


class DyadicGaussian:
    """Exact scalar ``(re_num + i*im_num) / 2**den_pow``.

    Instances are always canonical: either ``den_pow == 0`` or one of the
    numerators is odd.  Canonical forms compare and hash by value.
    """

    __slots__ = ("re_num", "im_num", "den_pow")

    def __init__(self, re_num: int = 0, im_num: int = 0, den_pow: int = 0):
        if den_pow < 0:
            raise ValueError("den_pow must be non-negative")
        re, im, k = _strip_twos(int(re_num), int(im_num), int(den_pow))
        object.__setattr__(self, "re_num", re)
        object.__setattr__(self, "im_num", im)
        object.__setattr__(self, "den_pow", k)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicGaussian is immutable")

    @classmethod
    def coerce(cls, value: Union["DyadicGaussian", int]) -> "DyadicGaussian":
        if isinstance(value, DyadicGaussian):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            den = value.denominator
            k = den.bit_length() - 1
            if den != 1 << k:
                raise ValueError(f"{value} is not dyadic")
            return cls(value.numerator, 0, k)
        raise TypeError(f"cannot convert {type(value).__name__} to DyadicGaussian")

    # -- arithmetic -------------------------------------------------------
    def _aligned(self, other: "DyadicGaussian"):
        k = max(self.den_pow, other.den_pow)
        a, b = self.den_pow, other.den_pow
        return (
            self.re_num << (k - a),
            self.im_num << (k - a),
            other.re_num << (k - b),
            other.im_num << (k - b),
            k,
        )

    def __add__(self, other):
        try:
            other = DyadicGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        r1, i1, r2, i2, k = self._aligned(other)
        return DyadicGaussian(r1 + r2, i1 + i2, k)

    __radd__ = __add__

    def __neg__(self):
        return DyadicGaussian(-self.re_num, -self.im_num, self.den_pow)

    def __sub__(self, other):
        try:
            other = DyadicGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return DyadicGaussian.coerce(other) - self

    def __mul__(self, other):
        try:
            other = DyadicGaussian.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re_num, self.im_num, other.re_num, other.im_num
        return DyadicGaussian(a * c - b * d, a * d + b * c, self.den_pow + other.den_pow)

    __rmul__ = __mul__

    def conjugate(self) -> "DyadicGaussian":
        return DyadicGaussian(self.re_num, -self.im_num, self.den_pow)

    def halve(self, times: int = 1) -> "DyadicGaussian":
        return DyadicGaussian(self.re_num, self.im_num, self.den_pow + times)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return Fraction(self.re_num**2 + self.im_num**2, 1 << (2 * self.den_pow))

    @property
    def real(self) -> Fraction:
        return Fraction(self.re_num, 1 << self.den_pow)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im_num, 1 << self.den_pow)

    def is_zero(self) -> bool:
        return self.re_num == 0 and self.im_num == 0

    def __complex__(self) -> complex:
        return complex(self.real, self.imag)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = DyadicGaussian(other)
        if not isinstance(other, DyadicGaussian):
            return NotImplemented
        return (
            self.re_num == other.re_num
            and self.im_num == other.im_num
            and self.den_pow == other.den_pow
        )

    def __hash__(self):
        return hash((self.re_num, self.im_num, self.den_pow))

    def __repr__(self):
        return f"DyadicGaussian({self.re_num}, {self.im_num}, {self.den_pow})"

    def __str__(self):
        re, im = self.real, self.imag
        if im == 0:
            return str(re)
        if re == 0:
            return f"{im}i"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{abs(im)}i"


ZERO = DyadicGaussian(0)
ONE = DyadicGaussian(1)
I_UNIT = DyadicGaussian(0, 1)
