"""Isolated points of codes and of their completions.

Isolation of a code index transfers to its image in the completion, but a
completion can have non-isolated points outside the code. The ``euclidean_list``
code shows this: every index is isolated, yet the completion contains the
segment ``{0} x [0, 1]`` where no point is isolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import enumerations as en
from .codes import IsolatedWith, MetricCode, NotIsolated
from .completion import CauchyPoint, DepthExceeded, embed, point_dist
from .reals import eps
from .verdict import Verdict


@dataclass(frozen=True)
class NotIsolatedUpTo:
    """``witnesses[m]`` is an index other than i within ``2^-m`` (up to oracle slack)."""

    k: int
    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class UnknownIsolation:
    depth: int


def isolated_at(code: MetricCode, i: int, depth: int, k: int):
    """Isolation verdict for index ``i``.

    The separation oracle is authoritative when present. Otherwise indices
    below ``depth`` are scanned for approximants at every scale ``m <= k``;
    ``IsolatedWith`` is only concluded for finite exact codes scanned fully.
    """
    code.check_index(i)
    sep = code.separation_at(i)
    if isinstance(sep, IsolatedWith):
        return sep
    if isinstance(sep, NotIsolated):
        return NotIsolatedUpTo(k, tuple(sep.stream(m) for m in range(k + 1)))
    top = depth if code.size is None else min(depth, code.size)
    others = [j for j in range(top) if j != i]
    witnesses = []
    for m in range(k + 1):
        p = m + 2
        hit = next((j for j in others
                    if (not code.pseudometric or code.dist(i, j, p) > 0)
                    and code.dist(i, j, p) <= eps(m) + eps(p)), None)
        if hit is None:
            break
        witnesses.append(hit)
    else:
        return NotIsolatedUpTo(k, tuple(witnesses))
    if code.size is not None and code.exact and top == code.size:
        positive = [d for d in (code.dist(i, j, 0) for j in others) if d > 0]
        return IsolatedWith(min(positive) if positive else Fraction(1))
    return UnknownIsolation(depth)


def perfect_check(code: MetricCode, depth: int, k: int) -> Verdict:
    bounds = {"depth": depth, "k": k}
    top = depth if code.size is None else min(depth, code.size)
    unresolved = []
    for i in range(top):
        v = isolated_at(code, i, depth, k)
        if isinstance(v, IsolatedWith):
            return Verdict.fails({"index": i, "delta": v.delta}, bounds, "isolated index")
        if isinstance(v, UnknownIsolation):
            unresolved.append(i)
    if unresolved:
        return Verdict.unknown(bounds, "isolation unresolved", witness={"indices": tuple(unresolved)})
    return Verdict.holds(bounds)


def isolated_in_completion(code: MetricCode, z: CauchyPoint, probes: Sequence[CauchyPoint],
                           k: int) -> Verdict:
    """FAILS (z is not isolated) when every scale ``m <= k`` has a probe apart from z
    yet within ``2^-m`` of it. Isolation itself is never certified."""
    if z.space is not code or any(p.space is not code for p in probes):
        raise ValueError("point and probes must live over the given code")
    bounds = {"k": k, "probes": len(probes)}
    witnesses = []
    for m in range(k + 1):
        lo, hi = 2 * eps(m + 2), eps(m)
        hit = None
        for idx, p in enumerate(probes):
            try:
                v = point_dist(z, p, m + 2)
            except DepthExceeded:
                continue
            if lo < v <= hi:
                hit = (m, idx, v)
                break
        if hit is None:
            return Verdict.unknown(bounds | {"scale": m}, "no probe in the window at this scale")
        witnesses.append(hit)
    return Verdict.fails({"approaches": tuple(witnesses)}, bounds, "not isolated")


def vertical_limit(code: MetricCode, y: Fraction, side: int = 1) -> CauchyPoint:
    """On ``euclidean_list``, a point converging to ``(0, y)`` for rational ``0 < y < 1``.

    Entry k is the list point whose second coordinate is ``y + side/(b(2^(k+3)b+1))``
    where ``y = a/b``; its index is so large that the first coordinate is negligible.
    """
    if code.family != "euclidean_list":
        raise ValueError("vertical limits are defined on euclidean_list")
    y = Fraction(y)
    if not 0 < y < 1:
        raise ValueError("y must lie strictly between 0 and 1")

    def at(k):
        b = y.denominator
        offset = Fraction(side, b * ((b << (k + 3)) + 1))
        return en.unit_interval_index(y + offset)

    return CauchyPoint(code, at, label=f"(0,{y}){'+' if side > 0 else '-'}")


def vertical_approach(code: MetricCode, y: Fraction, k: int, bound: int = 64) -> list[CauchyPoint]:
    """Probes near ``(0, y)`` on ``euclidean_list``, one per scale ``m <= k``.

    Scale m gets the vertical limit at height ``y +- 3 * 2^-(m+2)``, which sits
    in the middle of the window used by :func:`isolated_in_completion`. When
    neither height lies in ``(0, 1)`` the first of the first ``bound`` list
    points that falls in the window is taken instead.
    """
    y = Fraction(y)
    target = vertical_limit(code, y)
    probes = []
    for m in range(k + 1):
        offset = 3 * eps(m + 2)
        heights = [h for h in (y - offset, y + offset) if 0 < h < 1]
        if heights:
            probes.append(vertical_limit(code, heights[0]))
            continue
        lo, hi = 2 * eps(m + 2), eps(m)
        for n in range(bound):
            p = embed(code, n)
            if lo < point_dist(target, p, m + 2) <= hi:
                probes.append(p)
                break
    return probes
