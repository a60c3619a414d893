"""Countable metric codes presented as rational distance oracles.

A code lives on the naturals (or an initial segment ``0..size-1``). Its oracle
answers ``dist(i, j, k)`` with a rational within ``2^-k`` of the true distance.
The oracle only ever sees canonical pairs ``i < j``; the diagonal and symmetry
are handled here so they hold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

from . import enumerations as en
from .reals import QuadraticIrrational, abs_approx, eps, sqrt_approx
from .verdict import Verdict

Oracle = Callable[[int, int, int], Fraction]


@dataclass(frozen=True)
class IsolatedWith:
    """Every other index is at distance at least ``delta``."""

    delta: Fraction


@dataclass(frozen=True)
class NotIsolated:
    """``stream(k)`` is an index other than ``i`` within ``2^-k`` of ``i``."""

    stream: Callable[[int], int]


@dataclass(frozen=True, eq=False)
class MetricCode:
    name: str
    oracle: Oracle
    size: int | None = None  # None is omega
    exact: bool = False
    pseudometric: bool = False
    separation: Callable[[int], Any] | None = None
    diameter: Fraction | None = None
    ultrametric: bool = False
    coordinate: Callable[[int], Any] | None = None
    locate: Callable[[Any], int] | None = None
    family: str = "custom"
    params: dict = field(default_factory=dict)

    @property
    def infinite(self) -> bool:
        return self.size is None

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or i < 0 or (self.size is not None and i >= self.size):
            raise IndexError(f"index {i!r} out of range for code {self.name!r}")

    def dist(self, i: int, j: int, k: int) -> Fraction:
        self.check_index(i)
        self.check_index(j)
        if k < 0:
            raise ValueError("precision must be nonnegative")
        if i == j:
            return Fraction(0)
        if i > j:
            i, j = j, i
        return Fraction(self.oracle(i, j, k))

    def separation_at(self, i: int):
        self.check_index(i)
        if self.separation is None:
            return None
        return self.separation(i)

    def without_separation(self) -> MetricCode:
        """Same distances, but isolation must be discovered by scanning."""
        return _replace(self, separation=None)

    def describe(self) -> str:
        size = "omega" if self.size is None else str(self.size)
        flags = [f for f, on in (("exact", self.exact), ("pseudometric", self.pseudometric),
                                  ("ultrametric", self.ultrametric)) if on]
        params = [f"{k}={v}" for k, v in sorted(self.params.items()) if k != "size"]
        return " ".join([f"{self.name}: family={self.family} size={size}", *flags, *params])

    def __repr__(self):
        return f"MetricCode({self.name!r}, family={self.family!r})"


def _replace(code: MetricCode, **changes) -> MetricCode:
    return replace(code, **changes)


def dist(code: MetricCode, i: int, j: int, k: int) -> Fraction:
    """Rational within ``2^-k`` of ``d(i, j)``."""
    return code.dist(i, j, k)


# -- builtin families -------------------------------------------------------

def rational_line() -> MetricCode:
    q = en.rational_enumeration

    def separation(i):
        return NotIsolated(lambda k: en.rational_index(q(i) + eps(k + 1)))

    return MetricCode(
        "rational_line", lambda i, j, k: abs(q(i) - q(j)), exact=True,
        separation=separation, coordinate=q, locate=en.rational_index,
        family="rational_line",
    )


def dyadic_line() -> MetricCode:
    v = en.dyadic_enumeration

    def separation(i):
        return NotIsolated(lambda k: en.dyadic_index(v(i) + eps(k + 1)))

    return MetricCode(
        "dyadic_line", lambda i, j, k: abs(v(i) - v(j)), exact=True,
        separation=separation, coordinate=v, locate=en.dyadic_index,
        family="dyadic_line",
    )


def shifted_line(offset: QuadraticIrrational | str = "sqrt(2)") -> MetricCode:
    """The rationals translated by an irrational offset: index i is ``q_i + offset``."""
    if isinstance(offset, str):
        offset = QuadraticIrrational.parse(offset)
    q = en.rational_enumeration

    def point(i):
        return q(i) + offset

    def oracle(i, j, k):
        return abs_approx(point(i) - point(j), k)

    def locate(x):
        return en.rational_index(x - offset)

    def separation(i):
        return NotIsolated(lambda k: en.rational_index(q(i) + eps(k + 1)))

    return MetricCode(
        "shifted_line", oracle, exact=False, separation=separation,
        coordinate=point, locate=locate, family="shifted_line",
        params={"offset": str(offset)},
    )


def discrete(size: int | None = None) -> MetricCode:
    return MetricCode(
        "discrete", lambda i, j, k: Fraction(1), size=size, exact=True,
        separation=lambda i: IsolatedWith(Fraction(1)), diameter=Fraction(1),
        ultrametric=True, family="discrete",
        params={} if size is None else {"size": size},
    )


def geometric() -> MetricCode:
    """Index n sits at ``2^-n``; the completion adds the single limit point 0."""
    return MetricCode(
        "geometric", lambda i, j, k: eps(i) - eps(j), exact=True,
        separation=lambda i: IsolatedWith(eps(i + 1)), diameter=Fraction(1),
        coordinate=eps, family="geometric",
    )


def _parse_sizes(sizes):
    if sizes in ("omega", None):
        return "omega"
    if isinstance(sizes, str):
        sizes = [int(s) for s in sizes.split(",")]
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("product sizes must be positive integers or 'omega'")
    return sizes


def product(sizes="omega") -> MetricCode:
    """Eventually-zero sequences of a product with first-difference ultrametric.

    ``sizes`` is ``"omega"`` (Baire space) or a list of finite coordinate sizes
    whose last entry repeats forever; a trailing 1 makes the code finite.
    """
    sizes = _parse_sizes(sizes)
    if sizes == "omega":
        decode, encode, size = en.finite_seq_enumeration, en.finite_seq_index, None
        label = "omega"

        def size_at(p):
            return None
    else:
        label = ",".join(map(str, sizes))

        def size_at(p):
            return sizes[p] if p < len(sizes) else sizes[-1]

        size = None
        if sizes[-1] == 1:
            size = 1
            for s in sizes:
                size *= s

        @lru_cache(maxsize=1 << 16)
        def decode(i):
            digits, p = [], 0
            while i:
                s = size_at(p)
                digits.append(i % s)
                i //= s
                p += 1
            while digits and digits[-1] == 0:
                digits.pop()
            return tuple(digits)

        def encode(seq):
            i, mult = 0, 1
            for p, x in enumerate(seq):
                s = size_at(p)
                if not 0 <= x < s:
                    raise ValueError("digit out of range for its coordinate")
                i += x * mult
                mult *= s
            return i

    def oracle(i, j, k):
        p = en.first_difference(decode(i), decode(j))
        return Fraction(0) if p is None else eps(p)

    separation = None
    if size is None:
        def separation(i):
            x = decode(i)

            def stream(k):
                p = k + 1
                while size_at(p) is not None and size_at(p) < 2:
                    p += 1
                ys = list(x) + [0] * (p + 1 - len(x))
                s = size_at(p)
                ys[p] = ys[p] + 1 if s is None else (ys[p] + 1) % s
                return encode(ys)

            return NotIsolated(stream)

    return MetricCode(
        "baire" if sizes == "omega" else "product", oracle, size=size, exact=True,
        separation=separation, diameter=Fraction(1), ultrametric=True,
        coordinate=decode, locate=encode, family="product", params={"sizes": label},
    )


def baire() -> MetricCode:
    return product("omega")


def euclidean_list() -> MetricCode:
    """Points ``(1/(n+1), y_n)`` in the plane, ``y_n`` enumerating Q cap (0,1).

    Each point is isolated, yet the closure contains the whole segment
    ``{0} x [0, 1]``.
    """

    @lru_cache(maxsize=1 << 12)
    def point(n):
        return Fraction(1, n + 1), en.unit_interval_rational(n)

    def oracle(i, j, k):
        (x0, y0), (x1, y1) = point(i), point(j)
        return sqrt_approx((x0 - x1) ** 2 + (y0 - y1) ** 2, k)

    def locate(xy):
        x, y = map(Fraction, xy)
        n = en.unit_interval_index(y)
        if Fraction(1, n + 1) != x:
            raise ValueError(f"{xy} is not a point of the list")
        return n

    return MetricCode(
        "euclidean_list", oracle, exact=False,
        separation=lambda n: IsolatedWith(Fraction(1, (n + 1) * (n + 2))),
        coordinate=point, locate=locate, family="euclidean_list",
    )


def finite_table(rows, pseudometric: bool = False, name: str = "table") -> MetricCode:
    """Finite code from a full square matrix or its lower triangle (row i has i+1 entries)."""
    rows = [[Fraction(x) for x in row] for row in rows]
    n = len(rows)
    lower = all(len(r) == i + 1 for i, r in enumerate(rows))
    square = all(len(r) == n for r in rows)
    if not (lower or square):
        raise ValueError("table must be square or lower-triangular")
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            m[i][j] = x
            if lower:
                m[j][i] = x
    for i in range(n):
        if m[i][i] != 0:
            raise ValueError(f"table has nonzero diagonal entry at {i}")
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError(f"table is asymmetric at ({j}, {i})")
    table = tuple(tuple(r) for r in m)
    return MetricCode(
        name, lambda i, j, k: table[i][j], size=n, exact=True,
        pseudometric=pseudometric, family="finite_table", params={"size": n},
    )


FAMILIES = {
    "rational_line": rational_line,
    "dyadic_line": dyadic_line,
    "shifted_line": shifted_line,
    "product": product,
    "discrete": discrete,
    "geometric": geometric,
    "euclidean_list": euclidean_list,
    "finite_table": finite_table,
}


def make_builtin(family: str, **params) -> MetricCode:
    try:
        factory = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown builtin family {family!r}") from None
    if family == "finite_table":
        return factory(params.pop("matrix"), **params)
    return factory(**params)


# -- metric-axiom refuter ---------------------------------------------------

def verify_metric(code: MetricCode, n: int, k: int) -> Verdict:
    """Refute the metric axioms on indices below ``n`` at precision ``k``.

    Triangle slack is ``3 * 2^-k``. Distinct indices whose distance cannot be
    separated from 0 give UNKNOWN (approximate codes) or FAILS (exact codes
    not declared pseudometric).
    """
    if code.size is not None and n > code.size:
        raise IndexError(f"n={n} exceeds code size {code.size}")
    bounds = {"n": n, "k": k}
    tol = eps(k)
    d = [[code.dist(i, j, k) for j in range(n)] for i in range(n)]
    for i in range(n):
        if d[i][i] != 0:
            return Verdict.fails({"axiom": "diagonal", "indices": (i,), "value": d[i][i]},
                                 bounds, "diagonal")
        for j in range(i):
            if d[i][j] != d[j][i]:
                return Verdict.fails({"axiom": "symmetry", "indices": (j, i)}, bounds, "symmetry")
    floor = Fraction(0) if code.exact else -tol
    for i in range(n):
        for j in range(n):
            if d[i][j] < floor:
                return Verdict.fails({"axiom": "nonnegativity", "indices": (i, j),
                                      "value": d[i][j]}, bounds, "nonnegativity")
    slack = 3 * tol
    for i in range(n):
        di = d[i]
        for j in range(n):
            dij = di[j]
            dj = d[j]
            for l in range(n):
                if di[l] > dij + dj[l] + slack:
                    return Verdict.fails(
                        {"axiom": "triangle", "indices": (i, j, l),
                         "values": (di[l], dij, dj[l])}, bounds, "triangle")
    if not code.pseudometric:
        unresolved = []
        for i in range(n):
            for j in range(i + 1, n):
                if code.exact and d[i][j] == 0:
                    return Verdict.fails({"axiom": "indiscernibility", "indices": (i, j)},
                                         bounds, "indiscernibility")
                if not code.exact and d[i][j] <= tol:
                    unresolved.append((i, j))
        if unresolved:
            return Verdict.unknown(bounds, "indiscernibility unresolved",
                                   witness={"pairs": tuple(unresolved)})
    return Verdict.holds(bounds)
