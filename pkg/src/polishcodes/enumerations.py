"""Fixed bijections between the naturals and countable sets of numbers.

Both the rational and dyadic enumerations interleave signs the same way
(``0``, then ``+x_m`` at ``2m+1`` and ``-x_m`` at ``2m+2``), so negation is the
index involution :func:`negate_index` on either of them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt


def pair(x: int, y: int) -> int:
    """Cantor pairing ``(x, y) -> (x+y)(x+y+1)/2 + y``."""
    s = x + y
    return s * (s + 1) // 2 + y


def unpair(z: int) -> tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def negate_index(i: int) -> int:
    if i == 0:
        return 0
    return i + 1 if i % 2 == 1 else i - 1


# -- Calkin-Wilf ------------------------------------------------------------

def calkin_wilf(n: int) -> Fraction:
    """The n-th positive rational in Calkin-Wilf order, ``cw(0) = 1``.

    Walks the binary expansion of ``n + 1`` below its leading bit: a 0 bit is
    the left child ``a/(a+b)``, a 1 bit the right child ``(a+b)/b``. Runs of
    equal bits are applied in one step, so the cost follows the number of runs
    (the continued-fraction length) rather than the bit length.
    """
    if n < 0:
        raise ValueError("negative index")
    a, b = 1, 1
    bits = bin(n + 1)[3:]
    pos, end = 0, len(bits)
    while pos < end:
        bit = bits[pos]
        stop = bits.find("1" if bit == "0" else "0", pos)
        if stop < 0:
            stop = end
        t = stop - pos
        if bit == "0":
            b += t * a
        else:
            a += t * b
        pos = stop
    return Fraction(a, b)


def calkin_wilf_index(q: Fraction) -> int:
    q = Fraction(q)
    if q <= 0:
        raise ValueError("Calkin-Wilf enumerates positive rationals only")
    a, b = q.numerator, q.denominator
    # Climb to the root; runs of equal moves are collapsed with divmod so
    # rationals with large partial quotients stay cheap.
    runs = []
    while (a, b) != (1, 1):
        if a < b:
            t, r = divmod(b, a)
            if r == 0:
                t -= 1
                r = a
            runs.append((0, t))
            b = r
        else:
            t, r = divmod(a, b)
            if r == 0:
                t -= 1
                r = b
            runs.append((1, t))
            a = r
    code = 1
    for bit, t in reversed(runs):
        code <<= t
        if bit:
            code |= (1 << t) - 1
    return code - 1


@lru_cache(maxsize=1 << 16)
def rational_enumeration(i: int) -> Fraction:
    """Canonical bijection from the naturals onto the rationals."""
    if i < 0:
        raise ValueError("negative index")
    if i == 0:
        return Fraction(0)
    m, r = divmod(i - 1, 2)
    q = calkin_wilf(m)
    return q if r == 0 else -q


def rational_index(q: Fraction) -> int:
    """Inverse of :func:`rational_enumeration`."""
    q = Fraction(q)
    if q == 0:
        return 0
    m = calkin_wilf_index(abs(q))
    return 2 * m + 1 if q > 0 else 2 * m + 2


# -- dyadic rationals -------------------------------------------------------

def positive_dyadic(m: int) -> Fraction:
    e, c = unpair(m)
    if e == 0:
        return Fraction(c + 1)
    return Fraction(2 * c + 1, 1 << e)


def positive_dyadic_index(v: Fraction) -> int:
    v = Fraction(v)
    den = v.denominator
    if v <= 0 or den & (den - 1):
        raise ValueError(f"{v} is not a positive dyadic rational")
    e = den.bit_length() - 1
    if e == 0:
        return pair(0, v.numerator - 1)
    return pair(e, (v.numerator - 1) // 2)


@lru_cache(maxsize=1 << 16)
def dyadic_enumeration(i: int) -> Fraction:
    if i < 0:
        raise ValueError("negative index")
    if i == 0:
        return Fraction(0)
    m, r = divmod(i - 1, 2)
    v = positive_dyadic(m)
    return v if r == 0 else -v


def dyadic_index(v: Fraction) -> int:
    v = Fraction(v)
    if v == 0:
        return 0
    m = positive_dyadic_index(abs(v))
    return 2 * m + 1 if v > 0 else 2 * m + 2


def unit_interval_rational(n: int) -> Fraction:
    """Enumeration of the rationals in (0, 1): ``cw(n) / (1 + cw(n))``."""
    c = calkin_wilf(n)
    return c / (1 + c)


def unit_interval_index(r: Fraction) -> int:
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("expected a rational strictly between 0 and 1")
    return calkin_wilf_index(r / (1 - r))


# -- eventually-zero sequences ----------------------------------------------

def _tuple_decode(c: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length - 1):
        a, c = unpair(c)
        out.append(a)
    out.append(c)
    return tuple(out)


def _tuple_encode(xs: tuple[int, ...]) -> int:
    c = xs[-1]
    for a in reversed(xs[:-1]):
        c = pair(a, c)
    return c


@lru_cache(maxsize=1 << 16)
def finite_seq_enumeration(i: int) -> tuple[int, ...]:
    """Bijection from the naturals onto eventually-zero sequences of naturals.

    Sequences are returned trimmed of trailing zeros, so index 0 is ``()``.
    For ``i >= 1``, ``i - 1`` is unpaired into ``(length - 1, c)``; ``c`` is
    split by iterated pairing into a tuple of that length and its last entry
    is shifted up by one so it is nonzero.
    """
    if i < 0:
        raise ValueError("negative index")
    if i == 0:
        return ()
    extra, c = unpair(i - 1)
    xs = list(_tuple_decode(c, extra + 1))
    xs[-1] += 1
    return tuple(xs)


def finite_seq_index(seq) -> int:
    xs = list(seq)
    while xs and xs[-1] == 0:
        xs.pop()
    if any(x < 0 for x in xs):
        raise ValueError("sequence entries must be naturals")
    if not xs:
        return 0
    xs[-1] -= 1
    return 1 + pair(len(xs) - 1, _tuple_encode(tuple(xs)))


def first_difference(x: tuple[int, ...], y: tuple[int, ...]) -> int | None:
    """First position where two zero-padded sequences differ (None if equal)."""
    n = max(len(x), len(y))
    for p in range(n):
        a = x[p] if p < len(x) else 0
        b = y[p] if p < len(y) else 0
        if a != b:
            return p
    return None
