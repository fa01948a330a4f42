"""Exact Gaussian rationals, the scalar field Q(i) used everywhere in the package."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["GaussianRational", "gq", "parse_rational", "ZERO", "ONE", "I"]


def parse_rational(text) -> mpq:
    """Parse ``"p/q"``, ``"p"``, an int or a Fraction into an exact rational."""
    if isinstance(text, str):
        text = text.strip()
        if not text:
            raise ValueError("empty rational string")
        try:
            return mpq(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {text!r}") from exc
    if isinstance(text, bool):
        raise TypeError("bool is not a rational")
    if isinstance(text, (int, Rational)) or type(text) is type(mpq(0)):
        return mpq(text)
    raise TypeError(f"cannot interpret {text!r} as a rational")


class GaussianRational:
    """``re + im*i`` with arbitrary-precision rational parts.

    Instances are immutable and hashable.  Denominators are kept positive and
    in lowest terms by the underlying rational type.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is _MPQ else parse_rational(re))
        object.__setattr__(self, "im", im if type(im) is _MPQ else parse_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if type(x) is cls:
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not accepted")
        if isinstance(x, float):
            raise TypeError("floating point values are not accepted")
        return cls(x, 0)

    @classmethod
    def from_pair(cls, pair) -> "GaussianRational":
        re, im = pair
        return cls(parse_rational(re), parse_rational(im))

    def to_pair(self) -> list[str]:
        return [_rat_str(self.re), _rat_str(self.im)]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return _new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return _new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if isinstance(other, int) and not isinstance(other, bool):
                return _new(self.re * other, self.im * other)
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return _new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return _new(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussianRational":
        return _new(self.re, -self.im)

    def norm2(self):
        return self.re * self.re + self.im * self.im

    # comparison / hashing ------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is not GaussianRational:
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({_rat_str(self.re)!r}, {_rat_str(self.im)!r})"

    def __str__(self):
        return format_gq(self)


_MPQ = type(mpq(0))


def _new(re, im) -> GaussianRational:
    obj = object.__new__(GaussianRational)
    object.__setattr__(obj, "re", re)
    object.__setattr__(obj, "im", im)
    return obj


def _rat_str(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gq(z: GaussianRational) -> str:
    """Compact human form: ``1/2``, ``-i/2``, ``3/2+i``, ``(1/2-3i/4)``."""
    re, im = z.re, z.im
    if im == 0:
        return _rat_str(re)
    if im.denominator == 1:
        body = {1: "i", -1: "-i"}.get(int(im.numerator), f"{im.numerator}i")
    else:
        num = im.numerator
        numstr = {1: "i", -1: "-i"}.get(int(num), f"{num}i")
        body = f"{numstr}/{im.denominator}"
    if re == 0:
        return body
    sign = "" if body.startswith("-") else "+"
    return f"({_rat_str(re)}{sign}{body})"


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor accepting ints, Fractions or ``"p/q"`` strings."""
    return GaussianRational(parse_rational(re), parse_rational(im))


ZERO = gq(0)
ONE = gq(1)
I = gq(0, 1)
