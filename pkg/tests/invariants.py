"""Invariant checks shared by the hypothesis suite and the acceptance run.

Each ``check_*`` takes concrete parameters and returns None when the invariant
holds, or a short description of the violation.
"""

from fractions import Fraction
from functools import lru_cache

from polishcodes import codes as mc
from polishcodes import completion as cp
from polishcodes import functions as fn
from polishcodes import isometry as iso
from polishcodes.reals import eps

FAMILIES = ("rational_line", "dyadic_line", "shifted_line", "product", "discrete",
            "geometric", "euclidean_list")


@lru_cache(maxsize=None)
def code(family):
    return mc.make_builtin(family)


@lru_cache(maxsize=None)
def line_maps():
    Q = code("rational_line")
    return {
        "identity": fn.identity_code(Q),
        "negation": fn.negation_code(Q),
        "doubling": fn.doubling_code(Q),
        "third": fn.scaling_code(Q, Fraction(1, 3)),
        "squaring": fn.squaring_code(Q),
    }


@lru_cache(maxsize=None)
def line_points():
    Q = code("rational_line")
    pts = [cp.sqrt_point(Q, n) for n in (2, 3, 5, 6, 7)]
    pts += [cp.embed(Q, i) for i in (0, 1, 4, 9, 30)]
    pts.append(cp.negated(cp.sqrt_point(Q, 2)))
    pts.append(cp.line_point(Q, lambda k: Fraction(1, 3) + Fraction(1, 5) * eps(k + 2), "1/3+"))
    return tuple(pts)


@lru_cache(maxsize=None)
def geometric_points():
    G = code("geometric")
    return tuple([cp.geometric_limit(G)] + [cp.embed(G, i) for i in range(6)])


def check_cross_precision(family, i, j, k, m):
    c = code(family)
    a, b = c.dist(i, j, k), c.dist(i, j, m)
    if abs(a - b) > eps(k) + eps(m):
        return f"{family} d({i},{j}) at {k} vs {m}: {a} vs {b}"
    if c.exact and a != b:
        return f"exact {family} d({i},{j}) depends on precision"
    return None


def check_dist_triangle(family, i, j, l, k):
    c = code(family)
    lhs = c.dist(i, l, k)
    rhs = c.dist(i, j, k) + c.dist(j, l, k) + 3 * eps(k)
    return None if lhs <= rhs else f"{family} triangle ({i},{j},{l}) at {k}"


def check_point_triangle(space, a, b, c, k):
    pts = line_points() if space == "line" else geometric_points()
    z, w, u = pts[a % len(pts)], pts[b % len(pts)], pts[c % len(pts)]
    lhs = cp.point_dist(z, u, k)
    rhs = cp.point_dist(z, w, k) + cp.point_dist(w, u, k) + 3 * eps(k)
    return None if lhs <= rhs else f"point triangle {z.label},{w.label},{u.label} at {k}"


def check_commuting_square(name, i, k):
    f = line_maps()[name]
    w = fn.eval_extension(f, cp.embed(f.dom, i))
    v = cp.point_dist(w, cp.embed(f.cod, f(i)), k)
    return None if v <= eps(k) else f"{name} at embed({i}), k={k}: {v}"


def check_composition(outer, inner, p, k):
    maps = line_maps()
    f1, f0 = maps[outer], maps[inner]
    z = line_points()[p % len(line_points())]
    direct = fn.eval_extension(fn.compose(f1, f0), z)
    staged = fn.eval_extension(f1, fn.eval_extension(f0, z))
    v = cp.point_dist(direct, staged, k)
    return None if v <= 2 * eps(k) else f"{outer}.{inner} at {z.label}, k={k}: {v}"


def check_search_determinism(source, target, n, e, bound):
    A, B = code(source), code(target)
    n = min(n, A.size or n)
    bound = min(bound, B.size or bound)
    r1 = iso.search_isometry(A, B, n, e, bound)
    r2 = iso.search_isometry(A, B, n, e, bound)
    if type(r1) is not type(r2):
        return "result kinds differ"
    if isinstance(r1, iso.PartialIsometry):
        if r1.pairs != r2.pairs:
            return f"witnesses differ: {r1.pairs} vs {r2.pairs}"
        if not iso.check_partial_isometry(r1, r1.slack).ok:
            return f"witness {r1.pairs} fails its own check"
    elif r1 != r2:
        return f"bounds differ: {r1} vs {r2}"
    return None
