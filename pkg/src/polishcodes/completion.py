"""Points of a code's completion as fast Cauchy index sequences.

A point ``z`` is a procedure ``k -> index`` with ``d(z.at(k), z.at(m)) <= 2^-k``
for all ``k <= m``. The completion distance is evaluated at ``k + 2`` so the
two tails and the oracle error together stay within ``2^-k``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence

from . import enumerations as en
from .codes import MetricCode
from .reals import eps
from .verdict import Verdict


class ModulusViolation(ValueError):
    """A claimed fast-Cauchy modulus was refuted by the pair ``(k, m)``."""

    def __init__(self, k: int, m: int, value: Fraction, detail: str = ""):
        self.k, self.m, self.value = k, m, Fraction(value)
        msg = f"modulus violated at ({k}, {m}): distance approx {value}"
        super().__init__(msg + (f" ({detail})" if detail else ""))


class DepthExceeded(LookupError):
    """An explicitly listed point was asked for an entry beyond its data."""

    def __init__(self, depth: int, requested: int):
        self.depth, self.requested = depth, requested
        super().__init__(f"point known to depth {depth}, entry {requested} requested")


class CauchyPoint:
    """A completion point over ``space``.

    ``depth`` limits valid access for points given by finite data; asking for
    ``at(k)`` with ``k > depth`` raises :class:`DepthExceeded`.
    """

    def __init__(self, space: MetricCode, at: Callable[[int], int],
                 depth: int | None = None, label: str = ""):
        self.space = space
        self._at = at
        self.depth = depth
        self.label = label
        self._memo: dict[int, int] = {}
        self._lock = threading.Lock()

    def at(self, k: int) -> int:
        if k < 0:
            raise ValueError("precision must be nonnegative")
        if self.depth is not None and k > self.depth:
            raise DepthExceeded(self.depth, k)
        with self._lock:
            if k in self._memo:
                return self._memo[k]
        i = self._at(k)
        self.space.check_index(i)
        with self._lock:
            self._memo.setdefault(k, i)
        return i

    def prefix(self, n: int) -> list[int]:
        return [self.at(k) for k in range(n)]

    def __repr__(self):
        label = self.label or "point"
        return f"CauchyPoint({label!r} over {self.space.name!r})"


def embed(code: MetricCode, i: int) -> CauchyPoint:
    code.check_index(i)
    return CauchyPoint(code, lambda k: i, label=f"embed({i})")


def make_point(code: MetricCode, seq: Callable[[int], int], check_depth: int,
               label: str = "") -> CauchyPoint:
    """Wrap ``seq`` after spot-checking its modulus up to ``check_depth``.

    Raises :class:`ModulusViolation` when some ``k <= m <= check_depth`` has a
    distance certified above ``2^-k``. Passing says nothing about deeper entries.
    """
    j = check_depth + 2
    xs = [seq(k) for k in range(check_depth + 1)]
    for i in xs:
        code.check_index(i)
    for k in range(check_depth + 1):
        for m in range(k, check_depth + 1):
            v = code.dist(xs[k], xs[m], j)
            if v > eps(k) + eps(j):
                raise ModulusViolation(k, m, v)
    return CauchyPoint(code, seq, label=label)


def explicit_point(code: MetricCode, indices: Sequence[int], label: str = "") -> CauchyPoint:
    """Point given by a finite list ``i_0 .. i_K``; valid only to depth K."""
    data = tuple(indices)
    if not data:
        raise ValueError("explicit point needs at least one index")
    for i in data:
        code.check_index(i)
    return CauchyPoint(code, lambda k: data[k], depth=len(data) - 1, label=label)


def geometric_limit(code: MetricCode) -> CauchyPoint:
    """The limit of ``k -> k``; on the geometric code this is the point 0."""
    return CauchyPoint(code, lambda k: k, label="geometric-limit")


def sqrt_convergents(n: int):
    """Continued-fraction convergents ``(p, q)`` of ``sqrt(n)``, n not a square."""
    a0 = isqrt(n)
    if a0 * a0 == n:
        raise ValueError(f"{n} is a perfect square")
    m, d, a = 0, 1, a0
    p_prev, p, q_prev, q = 1, a0, 0, 1
    yield p, q
    while True:
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q


def sqrt_point(code: MetricCode, n: int) -> CauchyPoint:
    """The point ``sqrt(n)`` on a line code (rational or dyadic line).

    On the rational line entry k is the first convergent ``p_i/q_i`` with
    ``q_i * q_{i+1} >= 2^(k+1)``, so it lies within ``2^-(k+1)`` of the root.
    """
    if n < 0:
        raise ValueError("negative radicand")
    root = isqrt(n)
    if code.locate is None:
        raise ValueError(f"code {code.name!r} has no coordinate lookup")
    if root * root == n:
        i = code.locate(Fraction(root))
        return CauchyPoint(code, lambda k: i, label=f"sqrt({n})")
    if code.family == "rational_line":
        convs: list[tuple[int, int]] = []
        gen = sqrt_convergents(n)
        lock = threading.Lock()

        def at(k):
            target = 1 << (k + 1)
            with lock:
                idx = 0
                while True:
                    while len(convs) < idx + 2:
                        convs.append(next(gen))
                    if convs[idx][1] * convs[idx + 1][1] >= target:
                        p, q = convs[idx]
                        return code.locate(Fraction(p, q))
                    idx += 1

        return CauchyPoint(code, at, label=f"sqrt({n})")
    if code.family == "dyadic_line":
        def at(k):
            s = 1 << (k + 1)
            return code.locate(Fraction(isqrt(n * s * s), s))

        return CauchyPoint(code, at, label=f"sqrt({n})")
    raise ValueError(f"sqrt points are not defined on {code.family!r}")


def line_point(code: MetricCode, approximant: Callable[[int], Fraction],
               label: str = "") -> CauchyPoint:
    """Point from rational approximants ``a(k)`` within ``2^-(k+1)`` of the target."""
    if code.locate is None:
        raise ValueError(f"code {code.name!r} has no coordinate lookup")
    return CauchyPoint(code, lambda k: code.locate(approximant(k)), label=label)


def _same_space(z: CauchyPoint, w: CauchyPoint) -> None:
    if z.space is not w.space:
        raise ValueError(f"points live over different codes: {z.space.name!r}, {w.space.name!r}")


def point_dist(z: CauchyPoint, w: CauchyPoint, k: int) -> Fraction:
    """Rational within ``2^-k`` of the completion distance."""
    _same_space(z, w)
    j = k + 2
    return z.space.dist(z.at(j), w.at(j), j)


def apart(z: CauchyPoint, w: CauchyPoint, k: int) -> Verdict:
    """HOLDS when the points are certified distinct; equality is never certified."""
    _same_space(z, w)
    bounds = {"k": k}
    try:
        v = point_dist(z, w, k)
    except DepthExceeded as exc:
        return Verdict.unknown(bounds | {"depth": exc.depth}, "point data exhausted")
    if v > 2 * eps(k):
        return Verdict.holds(bounds, witness={"distance": v})
    return Verdict.unknown(bounds, "not separated at this precision", witness={"distance": v})


def negated(z: CauchyPoint) -> CauchyPoint:
    """``-z`` on a sign-interleaved line code."""
    return CauchyPoint(z.space, lambda k: en.negate_index(z.at(k)), z.depth, f"-{z.label}")
