"""Isometries between codes: bounded search, witness checking and amalgams."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import enumerations as en
from .codes import IsolatedWith, MetricCode
from .reals import QuadraticIrrational, abs_approx, eps
from .verdict import Verdict


@dataclass(frozen=True)
class PartialIsometry:
    source: MetricCode
    target: MetricCode
    pairs: tuple[tuple[int, int], ...]
    slack: int

    def __post_init__(self):
        pairs = tuple((int(i), int(j)) for i, j in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if len({i for i, _ in pairs}) != len(pairs) or len({j for _, j in pairs}) != len(pairs):
            raise ValueError("partial isometry pairs must be injective")

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


@dataclass(frozen=True)
class NoneUpTo:
    """No witness with targets below ``bound``; says nothing about larger targets."""

    bound: int
    explored: int
    reason: str = "exhausted"


def check_partial_isometry(pi: PartialIsometry, k: int) -> Verdict:
    tol = eps(pi.slack) + 2 * eps(k)
    bounds = {"pairs": len(pi.pairs), "k": k, "slack": pi.slack}
    pairs = pi.pairs
    for a in range(len(pairs)):
        i, i2 = pairs[a]
        for b in range(a + 1, len(pairs)):
            j, j2 = pairs[b]
            u = pi.source.dist(i, j, k)
            v = pi.target.dist(i2, j2, k)
            if abs(u - v) > tol:
                return Verdict.fails({"pairs": ((i, i2), (j, j2)), "source": u, "target": v},
                                     bounds, "distance mismatch")
    return Verdict.holds(bounds)


def _obstruction(sa, target: MetricCode, tol: Fraction, slack: Fraction):
    """Reason no target of this kind can host the source prefix, or None."""
    n = len(sa)
    if target.diameter is not None:
        for i in range(n):
            for j in range(i + 1, n):
                if sa[i][j] > target.diameter + slack + tol:
                    return "diameter", (i, j)
    if target.ultrametric:
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    if sa[i][l] > max(sa[i][j], sa[j][l]) + 2 * tol + 2 * slack:
                        return "ultrametric", (i, j, l)
    return None


def search_isometry(A: MetricCode, B: MetricCode, n: int, eps_: int, bound: int,
                    prune: bool = True) -> PartialIsometry | NoneUpTo:
    """Lexicographically least map of A's first ``n`` points into B's first ``bound``.

    Each new pair must match every earlier distance within
    ``2^-eps + 2 * 2^-(eps+2)``, distances read at precision ``eps + 2``.
    With ``prune`` set, diameter and ultrametric obstructions of the target are
    checked up front and short-circuit the search.
    """
    if A.size is not None and n > A.size:
        raise IndexError("n exceeds the source size")
    if B.size is not None and bound > B.size:
        raise IndexError("bound exceeds the target size")
    p = eps_ + 2
    tol = eps(eps_) + 2 * eps(p)
    sa = [[A.dist(i, j, p) for j in range(n)] for i in range(n)]
    if prune:
        hit = _obstruction(sa, B, tol, eps(p))
        if hit is not None:
            return NoneUpTo(bound, 0, f"{hit[0]} obstruction at {hit[1]}")
    if n > bound:
        return NoneUpTo(bound, 0, "fewer targets than source points")

    cache: dict[tuple[int, int], Fraction] = {}

    def db(x, y):
        key = (x, y) if x < y else (y, x)
        v = cache.get(key)
        if v is None:
            v = cache[key] = B.dist(x, y, p)
        return v

    assign: list[int] = []
    used: set[int] = set()
    explored = 0

    def extend(t: int) -> bool:
        nonlocal explored
        if t == n:
            return True
        row = sa[t]
        for c in range(bound):
            if c in used:
                continue
            explored += 1
            if all(abs(row[s] - db(c, assign[s])) <= tol for s in range(t)):
                assign.append(c)
                used.add(c)
                if extend(t + 1):
                    return True
                assign.pop()
                used.discard(c)
        return False

    if extend(0):
        return PartialIsometry(A, B, tuple(enumerate(assign)), eps_)
    return NoneUpTo(bound, explored)


# -- density ----------------------------------------------------------------

@dataclass(frozen=True)
class IndexSubset:
    """A decidable set of indices.

    ``exclusion(i)``, when given, returns a rational ``r`` certifying that every
    member lies at distance at least ``r`` from ``i`` (or None when it cannot).
    """

    contains: Callable[[int], bool]
    exclusion: Callable[[int], Fraction | None] | None = None
    label: str = ""

    def __call__(self, i: int) -> bool:
        return bool(self.contains(i))


def everything() -> IndexSubset:
    return IndexSubset(lambda i: True, label="all")


def halfline_subset(code: MetricCode, side: str) -> IndexSubset:
    """Indices of a line code whose coordinate is ``>= 0`` or ``<= 0``."""
    if code.coordinate is None:
        raise ValueError("half-lines need a line code with coordinates")
    sign = {"nonnegative": 1, "nonpositive": -1}[side]

    def signed(i):
        x = code.coordinate(i)
        x = x if sign > 0 else -x
        return x, (x.sign() if isinstance(x, QuadraticIrrational) else (x > 0) - (x < 0))

    def contains(i):
        return signed(i)[1] >= 0

    def exclusion(i):
        x, s = signed(i)
        if s >= 0:
            return None
        # rational lower bound on the distance to the half-line
        return max(abs_approx(x, 64) - eps(64), Fraction(0))

    return IndexSubset(contains, exclusion, side)


def parity_subset(code: MetricCode, parity: int) -> IndexSubset:
    """Even (0) or odd (1) indices.

    On the sign-interleaved line codes the evens are exactly the nonpositive
    values, so an exclusion certificate is attached.
    """
    contains = (lambda i: i % 2 == 0) if parity == 0 else (lambda i: i % 2 == 1)
    exclusion = None
    if code.family in ("rational_line", "dyadic_line"):
        coord = code.coordinate
        if parity == 0:
            def exclusion(i):
                x = coord(i)
                return x if x > 0 else None
        else:
            def exclusion(i):
                x = coord(i)
                return -x if x < 0 else None
    return IndexSubset(contains, exclusion, "even" if parity == 0 else "odd")


def density_check(code: MetricCode, subset, n: int, k: int, bound: int,
                  region: Callable[[int], bool] | None = None) -> Verdict:
    """Search, for each ``i < n``, a member ``j <= bound`` with ``dist(i, j, k+2) <= 2^-k``.

    ``region`` restricts the indices i that are checked, for subsets that are
    dense only in part of the space. Missing approximants give UNKNOWN unless a ball around ``i`` of radius
    above ``2^-k`` is certified free of members, either by the subset's own
    exclusion data or by an isolating radius from the code's separation oracle.
    """
    if code.size is not None and n > code.size:
        raise IndexError("n exceeds the code size")
    contains = subset if callable(subset) else subset.contains
    exclusion = getattr(subset, "exclusion", None)
    top = bound if code.size is None else min(bound, code.size - 1)
    members = [j for j in range(top + 1) if contains(j)]
    radius = eps(k)
    bounds = {"n": n, "k": k, "bound": bound}
    found, missing = {}, []
    for i in range(n):
        if region is not None and not region(i):
            continue
        for j in members:
            if code.dist(i, j, k + 2) <= radius:
                found[i] = j
                break
        else:
            missing.append(i)
    for i in missing:
        if exclusion is not None:
            r = exclusion(i)
            if r is not None and r > radius:
                return Verdict.fails({"index": i, "excluded_radius": r}, bounds,
                                     "ball free of subset members")
        sep = code.separation_at(i)
        if isinstance(sep, IsolatedWith) and sep.delta > radius and not contains(i):
            return Verdict.fails({"index": i, "isolating_radius": sep.delta}, bounds,
                                 "isolated point outside the subset")
    if missing:
        return Verdict.unknown(bounds, "no approximant found", witness={"indices": tuple(missing)})
    return Verdict.holds(bounds)


# -- dense isometry witnesses -----------------------------------------------

@dataclass(frozen=True)
class DenseIsometryWitness:
    """An isometry ``map`` plus a density modulus.

    ``density(j, k)`` returns a source index ``i`` with ``d(map(i), j) <= 2^-k``.
    """

    source: MetricCode
    target: MetricCode
    map: Callable[[int], int]
    density: Callable[[int, int], int]


def check_dense_witness(w: DenseIsometryWitness, n: int, k: int) -> Verdict:
    bounds = {"n": n, "k": k}
    src, tgt = w.source, w.target
    ns = n if src.size is None else min(n, src.size)
    images = [w.map(i) for i in range(ns)]
    for i in range(ns):
        for j in range(i + 1, ns):
            u = src.dist(i, j, k)
            v = tgt.dist(images[i], images[j], k)
            if abs(u - v) > 2 * eps(k):
                return Verdict.fails({"pair": (i, j), "source": u, "target": v}, bounds,
                                     "distance not preserved")
    nt = n if tgt.size is None else min(n, tgt.size)
    for j in range(nt):
        for kk in range(k + 1):
            i = w.density(j, kk)
            v = tgt.dist(w.map(i), j, kk + 2)
            if v > eps(kk) + eps(kk + 2):
                return Verdict.fails({"target": j, "precision": kk, "returned": i,
                                      "distance": v}, bounds, "density approximant too far")
    return Verdict.holds(bounds)


def identity_witness(code: MetricCode) -> DenseIsometryWitness:
    return DenseIsometryWitness(code, code, lambda i: i, lambda j, k: j)


def dyadic_into_rational(dyadic: MetricCode, rational: MetricCode) -> DenseIsometryWitness:
    """Inclusion of the dyadic line in the rational line.

    Density rounds ``q_j`` down to a multiple of ``2^-k``.
    """
    dv, qv = dyadic.coordinate, rational.coordinate

    def density(j, k):
        q = qv(j)
        s = 1 << k
        return en.dyadic_index(Fraction(q.numerator * s // q.denominator, s))

    return DenseIsometryWitness(dyadic, rational, lambda i: en.rational_index(dv(i)), density)


def image_prefix(g: Callable[[int], int], x: Callable[[int], bool], n: int) -> frozenset[int]:
    """``{g(i) : i < n, x(i)}``; reads nothing of ``x`` or ``g`` at or above ``n``."""
    return frozenset(g(i) for i in range(n) if x(i))


# -- amalgamation -----------------------------------------------------------

@dataclass(frozen=True)
class CrossOracle:
    """Distances between index ``i`` of one code and index ``j`` of another."""

    fn: Callable[[int, int, int], Fraction]
    exact: bool = False
    label: str = "custom"

    def __call__(self, i: int, j: int, k: int) -> Fraction:
        return Fraction(self.fn(i, j, k))


def constant_cross(c) -> CrossOracle:
    c = Fraction(c)
    return CrossOracle(lambda i, j, k: c, exact=True, label=f"const {c}")


def line_cross(A: MetricCode, B: MetricCode) -> CrossOracle:
    """``|x_i - y_j|`` from the coordinates of two line codes."""
    if A.coordinate is None or B.coordinate is None:
        raise ValueError("line cross distances need coordinates on both codes")
    exact = A.exact and B.exact

    def fn(i, j, k):
        return abs_approx(A.coordinate(i) - B.coordinate(j), k)

    return CrossOracle(fn, exact=exact, label="line")


def amalgamate(A: MetricCode, B: MetricCode, cross, name: str | None = None) -> MetricCode:
    """Interleave two codes: ``2i`` is A's point i, ``2j+1`` is B's point j.

    ``cross(i, j, k)`` supplies ``d(2i, 2j+1)``. The result is flagged as a
    pseudometric; whether the cross data is coherent is for
    :func:`~polishcodes.codes.verify_metric` to judge.
    """
    if A.size is None and B.size is None:
        size = None
    elif A.size is not None and A.size == B.size:
        size = 2 * A.size
    else:
        raise ValueError("amalgam needs two infinite codes or two finite codes of equal size")
    if not isinstance(cross, CrossOracle):
        cross = CrossOracle(cross)

    def oracle(i, j, k):
        if i % 2 == 0 and j % 2 == 0:
            return A.dist(i // 2, j // 2, k)
        if i % 2 == 1 and j % 2 == 1:
            return B.dist(i // 2, j // 2, k)
        if i % 2 == 0:
            return cross(i // 2, j // 2, k)
        return cross(j // 2, i // 2, k)

    def coordinate(i):
        part = A if i % 2 == 0 else B
        return part.coordinate(i // 2) if part.coordinate else None

    return MetricCode(
        name or f"amalgam({A.name},{B.name})", oracle, size=size,
        exact=A.exact and B.exact and cross.exact, pseudometric=True,
        coordinate=coordinate if (A.coordinate and B.coordinate) else None,
        family="amalgam", params={"left": A.name, "right": B.name, "cross": cross.label},
    )


def amalgam_witness(amalgam: MetricCode, left: MetricCode, right: MetricCode, side: str,
                    approximate_other: Callable[[int, int], int]) -> DenseIsometryWitness:
    """Embedding of one side into an amalgam, ``i -> 2i`` or ``j -> 2j+1``.

    ``approximate_other(j, k)`` must return an index of this side within
    ``2^-k`` of the other side's point ``j``.
    """
    if side == "left":
        src, own, parity = left, (lambda i: 2 * i), 0
    elif side == "right":
        src, own, parity = right, (lambda i: 2 * i + 1), 1
    else:
        raise ValueError("side must be 'left' or 'right'")

    def density(j, k):
        if j % 2 == parity:
            return j // 2
        return approximate_other(j // 2, k)

    return DenseIsometryWitness(src, amalgam, own, density)
