"""Exact rational helpers and quadratic irrationals with outward-rounded approximation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def eps(k: int) -> Fraction:
    """The tolerance ``2^-k`` (``k`` may be negative)."""
    return Fraction(1, 1 << k) if k >= 0 else Fraction(1 << -k)


def sqrt_interval(r: Fraction, k: int) -> tuple[Fraction, Fraction]:
    """Dyadic bracket ``lo <= sqrt(r) <= hi`` with ``hi - lo = 2^-k``."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("square root of a negative rational")
    if k < 0:
        k = 0
    scale = 1 << k
    # isqrt(floor(r * 4^k)) == floor(sqrt(r) * 2^k)
    lo = isqrt(r.numerator * scale * scale // r.denominator)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def sqrt_approx(r: Fraction, k: int) -> Fraction:
    """A rational within ``2^-k`` of ``sqrt(r)`` (exact when r is a square)."""
    r = Fraction(r)
    pn, pd = isqrt(r.numerator), isqrt(r.denominator)
    if pn * pn == r.numerator and pd * pd == r.denominator:
        return Fraction(pn, pd)
    lo, hi = sqrt_interval(r, k + 1)
    return (lo + hi) / 2


def abs_approx(x, k: int) -> Fraction:
    """Nonnegative rational within ``2^-k`` of ``|x|``."""
    if isinstance(x, QuadraticIrrational):
        return max(abs(x).approx(k), Fraction(0))
    return abs(Fraction(x))


def approx(x, k: int) -> Fraction:
    if isinstance(x, QuadraticIrrational):
        return x.approx(k)
    return Fraction(x)


def ceil_log2(x: Fraction) -> int:
    """Least integer ``e`` with ``2^e >= x`` for positive rational ``x``."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("ceil_log2 needs a positive argument")
    e = x.numerator.bit_length() - x.denominator.bit_length()
    while eps(-e) < x:
        e += 1
    while eps(-(e - 1)) >= x:
        e -= 1
    return e


_QI = re.compile(
    r"^\s*(?:(?P<a>-?\d+(?:/\d+)?)\s*(?P<op>[+-])\s*)?"
    r"(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\((?P<s>\d+)\)\s*$"
)


@dataclass(frozen=True)
class QuadraticIrrational:
    """The real number ``a + b*sqrt(s)`` with rational ``a, b`` and integer ``s``."""

    a: Fraction
    b: Fraction
    s: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.s < 2 or isqrt(self.s) ** 2 == self.s:
            raise ValueError("radicand must be a non-square integer >= 2")

    @classmethod
    def parse(cls, text: str) -> QuadraticIrrational:
        """Parse descriptors such as ``sqrt(2)``, ``3*sqrt(5)`` or ``1/2-2*sqrt(3)``."""
        m = _QI.match(text)
        if not m:
            raise ValueError(f"malformed quadratic irrational {text!r}")
        a = Fraction(m["a"]) if m["a"] else Fraction(0)
        b = Fraction(m["b"]) if m["b"] else Fraction(1)
        if m["op"] == "-":
            b = -b
        return cls(a, b, int(m["s"]))

    def __str__(self):
        from .verdict import format_rational

        head = f"{format_rational(self.a)}+" if self.a else ""
        coeff = "" if self.b == 1 else f"{format_rational(self.b)}*"
        return f"{head}{coeff}sqrt({self.s})"

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(s)``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        return sa if self.a * self.a > self.b * self.b * self.s else sb

    def __neg__(self):
        return QuadraticIrrational(-self.a, -self.b, self.s)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        if isinstance(other, QuadraticIrrational):
            if other.s != self.s:
                return NotImplemented
            return _simplify(self.a + other.a, self.b + other.b, self.s)
        return _simplify(self.a + Fraction(other), self.b, self.s)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def approx(self, k: int) -> Fraction:
        """Rational within ``2^-k`` of the value."""
        if self.b == 0:
            return self.a
        scale = abs(self.b)
        # error of sqrt(b^2 s) approximation is at most 2^-k directly
        root = sqrt_approx(scale * scale * self.s, k)
        return self.a + root if self.b > 0 else self.a - root


def _simplify(a, b, s):
    if b == 0:
        return Fraction(a)
    return QuadraticIrrational(a, b, s)
