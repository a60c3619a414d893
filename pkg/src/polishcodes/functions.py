"""Codes for continuous functions: Cauchy-continuous index maps with witnesses.

A :class:`FunctionCode` carries an index map ``g`` between two codes, a
ball-family modulus (for every radius R about index 0 a uniform continuity
modulus on that ball) and a range bound. The modulus is what lets an index
map be extended to the completions.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import enumerations as en
from .codes import MetricCode
from .completion import CauchyPoint, DepthExceeded, ModulusViolation, embed, point_dist
from .isometry import CrossOracle, DenseIsometryWitness, amalgamate, check_dense_witness
from .reals import ceil_log2, eps
from .verdict import Status, Verdict

RADIUS_PRECISION = 20


class RadiusNotCovered(ValueError):
    """The modulus family has no entry for a ball this large."""


class BallModulus:
    """Family ``R -> tau_R`` of nondecreasing precision maps.

    Claim: if ``d(0, i), d(0, j) <= R`` and ``d(i, j) <= 2^-tau_R(k)`` then
    ``d'(g(i), g(j)) <= 2^-k``.
    """

    def __init__(self, family: Callable[[Fraction], Callable[[int], int]], label: str = ""):
        self._family = family
        self.label = label

    def at(self, R) -> Callable[[int], int]:
        return self._family(Fraction(R))

    def tau(self, R, k: int) -> int:
        return int(self.at(R)(k))

    def __repr__(self):
        return f"BallModulus({self.label or 'custom'})"


def uniform_modulus(shift: int) -> BallModulus:
    """``tau_R(k) = max(k + shift, 0)`` on every ball."""
    return BallModulus(lambda R: (lambda k: max(k + shift, 0)), f"shift {shift}")


def step_modulus(entries: Sequence[tuple[Fraction | None, int]]) -> BallModulus:
    """Uses the smallest declared radius covering R; ``None`` is an unbounded radius."""
    finite = sorted((Fraction(r), s) for r, s in entries if r is not None)
    unbounded = [s for r, s in entries if r is None]
    if len(unbounded) > 1:
        raise ValueError("at most one unbounded radius")

    def family(R):
        for r, s in finite:
            if R <= r:
                return lambda k, s=s: max(k + s, 0)
        if unbounded:
            s = unbounded[0]
            return lambda k: max(k + s, 0)
        raise RadiusNotCovered(f"no modulus declared for radius {R}")

    label = ", ".join(f"{'inf' if r is None else r}:{s}" for r, s in entries)
    return BallModulus(family, label)


def squaring_modulus() -> BallModulus:
    """``tau_R(k) = k + ceil(log2(2R)) + 1``, from ``|a^2 - b^2| <= 2R|a - b|``."""
    def family(R):
        e = ceil_log2(2 * R) if R > 0 else 0
        return lambda k: max(k + e + 1, 0)

    return BallModulus(family, "square")


@dataclass(frozen=True, eq=False)
class FunctionCode:
    g: Callable[[int], int]
    dom: MetricCode
    cod: MetricCode
    modulus: BallModulus | None
    range_bound: Callable[[Fraction], Fraction] | None
    name: str = "fn"

    def __call__(self, i: int) -> int:
        j = self.g(i)
        self.cod.check_index(j)
        return j

    def __repr__(self):
        return f"FunctionCode({self.name!r}: {self.dom.name} -> {self.cod.name})"


SAMPLE_RADII = tuple(Fraction(1, 4) * 2 ** e for e in range(14))


def make_function_code(g, dom: MetricCode, cod: MetricCode, modulus: BallModulus | None,
                       range_bound, name: str = "fn", sample_k: int = 64) -> FunctionCode:
    """Build a function code after checking each sampled ``tau_R`` is nondecreasing."""
    if modulus is not None:
        for R in SAMPLE_RADII:
            try:
                tau = modulus.at(R)
            except RadiusNotCovered:
                continue
            values = [tau(k) for k in range(sample_k + 1)]
            for k in range(sample_k):
                if values[k + 1] < values[k]:
                    raise ValueError(f"modulus for radius {R} decreases at k={k}")
    return FunctionCode(g, dom, cod, modulus, range_bound, name)


def _radius_upper(code: MetricCode, i: int) -> Fraction:
    p = RADIUS_PRECISION
    return code.dist(0, i, p) + (0 if code.exact else eps(p))


def check_modulus(fc: FunctionCode, n: int, k: int) -> Verdict:
    """Look for ``i, j < n`` refuting the modulus claim at output precision ``k``.

    Pairs outside every declared ball are skipped and counted.
    """
    bounds = {"n": n, "k": k}
    if fc.modulus is None:
        return Verdict.unknown(bounds, "no modulus supplied")
    dom, cod = fc.dom, fc.cod
    n_eff = n if dom.size is None else min(n, dom.size)
    radii = [_radius_upper(dom, i) for i in range(n_eff)]
    images = [fc(i) for i in range(n_eff)]
    out_slack = Fraction(0) if cod.exact else eps(k + 2)
    skipped = 0
    for i in range(n_eff):
        for j in range(i + 1, n_eff):
            R = max(radii[i], radii[j])
            try:
                tau = fc.modulus.tau(R, k)
            except RadiusNotCovered:
                skipped += 1
                continue
            p = tau + 2
            dij = dom.dist(i, j, p)
            if dij + (0 if dom.exact else eps(p)) > eps(tau):
                continue
            v = cod.dist(images[i], images[j], k + 2)
            if v - out_slack > eps(k):
                return Verdict.fails(
                    {"pair": (i, j), "radius": R, "tau": tau, "dom_distance": dij,
                     "cod_distance": v}, bounds | {"skipped": skipped}, "modulus refuted")
    return Verdict.holds(bounds | {"skipped": skipped})


def _tail_radius(code: MetricCode, z: CauchyPoint) -> Fraction:
    m0 = 2 if z.depth is None else min(2, z.depth)
    return code.dist(0, z.at(m0), 2) + 2


def image_sequence(fc: FunctionCode, z: CauchyPoint, R_hint=None) -> Callable[[int], int]:
    if z.space is not fc.dom:
        raise ValueError("point does not live over the function's domain")
    if fc.modulus is None:
        return lambda k: fc(z.at(k))
    R = Fraction(R_hint) if R_hint is not None else _tail_radius(fc.dom, z)
    tau = fc.modulus.at(R)
    return lambda k: fc(z.at(tau(k)))


def eval_extension(fc: FunctionCode, z: CauchyPoint, R_hint=None) -> CauchyPoint:
    """The extension of ``fc`` to the completion, evaluated at ``z``.

    Entry k is ``g(z.at(tau_R(k)))`` with R bounding the tail of ``z`` about
    index 0 (``dist(0, z.at(2), 2) + 2`` unless ``R_hint`` is given).
    """
    if fc.modulus is None:
        raise ValueError("extension needs a modulus")
    seq = image_sequence(fc, z, R_hint)
    return CauchyPoint(fc.cod, seq, label=f"{fc.name}({z.label})")


def battery_check(fc: FunctionCode, battery: Sequence[CauchyPoint], depth: int) -> Verdict:
    """Check that images of the battery points are fast Cauchy up to ``depth``.

    Images are re-indexed through the modulus when one is present and read raw
    otherwise.
    """
    bounds = {"points": len(battery), "depth": depth}
    cod = fc.cod
    j = depth + 2
    slack = Fraction(0) if cod.exact else eps(j)
    unknown = []
    for idx, z in enumerate(battery):
        try:
            seq = image_sequence(fc, z)
            ws = [seq(k) for k in range(depth + 1)]
        except DepthExceeded as exc:
            unknown.append((idx, f"point data exhausted at depth {exc.depth}"))
            continue
        except RadiusNotCovered as exc:
            unknown.append((idx, str(exc)))
            continue
        for k in range(depth + 1):
            for m in range(k + 1, depth + 1):
                v = cod.dist(ws[k], ws[m], j)
                if v - slack > eps(k):
                    return Verdict.fails(
                        {"point": idx, "label": z.label, "pair": (k, m), "distance": v,
                         "image_prefix": tuple(ws), "reindexed": fc.modulus is not None},
                        bounds, "image sequence not Cauchy")
    if unknown:
        return Verdict.unknown(bounds, "battery incomplete", witness={"points": tuple(unknown)})
    return Verdict.holds(bounds)


def compose(fc1: FunctionCode, fc0: FunctionCode, name: str | None = None) -> FunctionCode:
    """``fc1 o fc0``; moduli chain through ``fc0``'s range bound re-centred at index 0."""
    if fc0.cod is not fc1.dom:
        raise ValueError("codomain of the inner code is not the domain of the outer one")
    if fc0.range_bound is None or fc1.range_bound is None:
        raise ValueError("composition needs range bounds on both codes")
    centre = _radius_upper(fc0.cod, fc0(0))
    rb0, rb1 = fc0.range_bound, fc1.range_bound

    def inner_radius(R):
        return Fraction(rb0(Fraction(R))) + centre

    modulus = None
    if fc0.modulus is not None and fc1.modulus is not None:
        m0, m1 = fc0.modulus, fc1.modulus

        def family(R):
            t0 = m0.at(R)
            t1 = m1.at(inner_radius(R))
            return lambda k: t0(t1(k))

        modulus = BallModulus(family, f"{m0.label} after {m1.label}")

    def range_bound(R):
        return Fraction(rb1(inner_radius(R))) + Fraction(rb1(centre))

    g0, g1 = fc0.g, fc1.g
    return FunctionCode(lambda i: g1(g0(i)), fc0.dom, fc1.cod, modulus, range_bound,
                        name or f"{fc1.name}.{fc0.name}")


def reify_function(point_map: Callable[[CauchyPoint], CauchyPoint], dom: MetricCode,
                   cod: MetricCode, modulus: BallModulus, depth: int,
                   range_bound=None, name: str = "reified") -> tuple[FunctionCode, MetricCode]:
    """Turn a map on completion points into a function code.

    The codomain is enlarged to the amalgam of ``cod`` with the image points
    ``point_map(embed(i))``; index i is sent to the odd index ``2i + 1``. The
    first ``depth`` image points have their modulus spot-checked to ``depth``.
    """
    memo: dict[int, CauchyPoint] = {}
    lock = threading.Lock()

    def image(i):
        with lock:
            z = memo.get(i)
        if z is None:
            z = point_map(embed(dom, i))
            if z.space is not cod:
                raise ValueError("point_map must return points over cod")
            with lock:
                z = memo.setdefault(i, z)
        return z

    probe = depth + 2
    for i in range(depth if dom.size is None else min(depth, dom.size)):
        z = image(i)
        xs = [z.at(k) for k in range(depth + 1)]
        for a in range(depth + 1):
            for b in range(a + 1, depth + 1):
                v = cod.dist(xs[a], xs[b], probe)
                if v > eps(a) + eps(probe):
                    raise ModulusViolation(a, b, v, f"image of index {i}")

    image_code = MetricCode(
        f"{name}-image", lambda i, j, k: point_dist(image(i), image(j), k),
        size=dom.size, exact=False, family="image",
    )
    cross = CrossOracle(lambda i, j, k: point_dist(embed(cod, i), image(j), k), label="completion")
    enlarged = amalgamate(cod, image_code, cross, name=f"{cod.name}+{name}")
    fc = FunctionCode(lambda i: 2 * i + 1, dom, enlarged, modulus, range_bound, name)
    return fc, enlarged


# -- relations between function codes ---------------------------------------

@dataclass(frozen=True)
class CdiWitness:
    """Dense isometries on the domain side (``iota``) and codomain side (``iota_prime``)."""

    iota: DenseIsometryWitness
    iota_prime: DenseIsometryWitness


def check_cdi_witness(fc0: FunctionCode, fc1: FunctionCode, w: CdiWitness,
                      n: int, k: int) -> Verdict:
    if w.iota.source is not fc0.dom or w.iota.target is not fc1.dom:
        raise ValueError("iota must map fc0.dom into fc1.dom")
    if w.iota_prime.source is not fc0.cod or w.iota_prime.target is not fc1.cod:
        raise ValueError("iota_prime must map fc0.cod into fc1.cod")
    bounds = {"n": n, "k": k}
    n_eff = n if fc0.dom.size is None else min(n, fc0.dom.size)
    for i in range(n_eff):
        lhs = w.iota_prime.map(fc0(i))
        rhs = fc1(w.iota.map(i))
        if lhs != rhs:
            return Verdict.fails({"index": i, "lhs": lhs, "rhs": rhs}, bounds, "commuting square")
    for label, witness in (("iota", w.iota), ("iota_prime", w.iota_prime)):
        v = check_dense_witness(witness, n, k)
        if v.failed:
            return Verdict.fails({"witness": label, "detail": v.witness}, bounds, v.reason)
    return Verdict.holds(bounds)


def check_homeo_pair(fc: FunctionCode, fc_inv: FunctionCode, n: int, k: int,
                     battery: Sequence[CauchyPoint] = (),
                     inverse_battery: Sequence[CauchyPoint] = (),
                     depth: int | None = None) -> Verdict:
    """Check a candidate Cauchy-continuous bijection with Cauchy-continuous inverse.

    Every stage runs; the witness of a failing verdict names the first failing
    stage and carries all stage verdicts.
    """
    if fc.dom is not fc_inv.cod or fc.cod is not fc_inv.dom:
        raise ValueError("fc_inv must run between the same codes in the opposite direction")
    depth = k if depth is None else depth
    bounds = {"n": n, "k": k, "depth": depth}
    checks: dict[str, Verdict] = {}

    def round_trip(f, h, code):
        m = n if code.size is None else min(n, code.size)
        for i in range(m):
            if h(f(i)) != i:
                return Verdict.fails({"index": i, "image": h(f(i))}, {"n": m}, "not an inverse")
        return Verdict.holds({"n": m})

    checks["left-inverse"] = round_trip(fc, fc_inv, fc.dom)
    checks["right-inverse"] = round_trip(fc_inv, fc, fc.cod)
    checks["modulus"] = check_modulus(fc, n, k)
    checks["inverse-modulus"] = check_modulus(fc_inv, n, k)
    checks["battery"] = battery_check(fc, battery, depth)
    checks["inverse-battery"] = battery_check(fc_inv, inverse_battery, depth)
    failed = [s for s, v in checks.items() if v.failed]
    if failed:
        return Verdict.fails({"stage": failed[0], "checks": checks}, bounds, f"{failed[0]} failed")
    if any(v.status is Status.UNKNOWN for v in checks.values()):
        return Verdict.unknown(bounds, "some stage inconclusive", witness={"checks": checks})
    return Verdict.holds(bounds, witness={"checks": checks})


# -- builtin index maps -----------------------------------------------------

def _line(code: MetricCode):
    if code.coordinate is None or code.locate is None:
        raise ValueError(f"{code.name!r} is not a line code")
    return code.coordinate, code.locate


def identity_code(code: MetricCode) -> FunctionCode:
    return make_function_code(lambda i: i, code, code, uniform_modulus(0), lambda R: R, "identity")


def negation_code(code: MetricCode) -> FunctionCode:
    """``x -> -x`` on a sign-interleaved line code, as the index involution."""
    if code.family not in ("rational_line", "dyadic_line"):
        raise ValueError("negation is the index involution only on rational/dyadic lines")
    return make_function_code(en.negate_index, code, code, uniform_modulus(0),
                              lambda R: R, "negation")


def scaling_code(code: MetricCode, r, name: str | None = None) -> FunctionCode:
    """``x -> r x`` on a line code; the modulus shifts by ``ceil(log2 |r|)``."""
    r = Fraction(r)
    coord, locate = _line(code)
    shift = ceil_log2(abs(r)) if r != 0 else 0
    return make_function_code(lambda i: locate(r * coord(i)), code, code,
                              uniform_modulus(shift), lambda R: abs(r) * R,
                              name or f"scale {r}")


def doubling_code(code: MetricCode) -> FunctionCode:
    return scaling_code(code, 2, "doubling")


def squaring_code(code: MetricCode) -> FunctionCode:
    """``x -> x^2``: Cauchy-continuous, uniformly continuous only on balls."""
    coord, locate = _line(code)
    return make_function_code(lambda i: locate(coord(i) ** 2), code, code,
                              squaring_modulus(), lambda R: R * R, "squaring")


def swap_map(a: int, b: int) -> Callable[[int], int]:
    return lambda i: b if i == a else a if i == b else i


def table_map(pairs: Sequence[tuple[int, int]]) -> Callable[[int], int]:
    table = dict(pairs)

    def g(i):
        try:
            return table[i]
        except KeyError:
            raise IndexError(f"map table has no entry for index {i}") from None

    return g
