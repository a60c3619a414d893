from fractions import Fraction

import pytest

from polishcodes import completion as cp
from polishcodes import enumerations as en
from polishcodes import codes as mc
from polishcodes.reals import eps
from polishcodes.verdict import Status


def test_embed_is_constant(D1):
    z = cp.embed(D1, 3)
    assert z.at(20) == 3 and z.prefix(4) == [3, 3, 3, 3]


def test_embed_preserves_distances(Q, D1):
    for i, j in [(0, 1), (3, 5), (10, 7)]:
        for k in (0, 4, 12):
            assert abs(cp.point_dist(cp.embed(Q, i), cp.embed(Q, j), k) - Q.dist(i, j, k)) <= eps(k)
    for i in range(5):
        for j in range(5):
            if i != j:
                assert cp.point_dist(cp.embed(D1, i), cp.embed(D1, j), 2) >= Fraction(3, 4)


def test_make_point_geometric_limit(D2):
    z = cp.make_point(D2, lambda k: k, 30)
    assert z.at(7) == 7


def test_make_point_rejects_discrete_sequence(D1):
    with pytest.raises(cp.ModulusViolation) as err:
        cp.make_point(D1, lambda k: k, 5)
    # d(0, 1) = 1 meets the bound 2^-0; the first pair over its bound is (1, 2)
    assert (err.value.k, err.value.m, err.value.value) == (1, 2, 1)


def test_sqrt2_convergents_validated(Q):
    r2 = cp.sqrt_point(Q, 2)
    z = cp.make_point(Q, r2.at, 24)
    for k in range(24):
        x = en.rational_enumeration(z.at(k))
        assert abs(x * x - 2) <= 3 * eps(k + 1)


def test_sqrt_convergents_are_the_known_ones():
    gen = cp.sqrt_convergents(2)
    assert [next(gen) for _ in range(5)] == [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)]


def test_limit_distances_on_geometric(D2):
    lim = cp.geometric_limit(D2)
    for n in range(11):
        v = cp.point_dist(lim, cp.embed(D2, n), 20)
        assert abs(v - Fraction(1, 2 ** n)) <= eps(20)


def test_point_dist_self_and_symmetry(Q):
    z, w = cp.sqrt_point(Q, 2), cp.sqrt_point(Q, 3)
    for k in range(0, 30, 3):
        assert cp.point_dist(z, z, k) <= eps(k)
        assert cp.point_dist(z, w, k) == cp.point_dist(w, z, k)


def test_two_sqrt2_representatives_agree(Q):
    a = cp.sqrt_point(Q, 2)
    b = cp.make_point(Q, lambda k: a.at(k + 3), 10)
    c = cp.line_point(Q, lambda k: _bisect2(k + 1))
    for k in range(25):
        assert cp.point_dist(a, b, k) <= eps(k)
        assert cp.point_dist(a, c, k) <= eps(k)


def _bisect2(k):
    lo, hi = Fraction(1), Fraction(2)
    while hi - lo > eps(k):
        mid = (lo + hi) / 2
        lo, hi = (mid, hi) if mid * mid < 2 else (lo, mid)
    return lo


def test_dyadic_sqrt_point():
    Dy = mc.dyadic_line()
    z = cp.sqrt_point(Dy, 2)
    for k in range(20):
        x = en.dyadic_enumeration(z.at(k))
        assert 0 <= 2 - x * x <= 6 * eps(k + 1)


def test_perfect_square_is_constant(Q):
    z = cp.sqrt_point(Q, 9)
    assert {z.at(k) for k in range(10)} == {en.rational_index(Fraction(3))}


def test_density_at_scale(Q):
    z = cp.sqrt_point(Q, 5)
    for k in range(20):
        assert cp.point_dist(z, cp.embed(Q, z.at(k + 2)), k) <= eps(k)


def test_apart(Q, D1):
    assert cp.apart(cp.embed(D1, 0), cp.embed(D1, 1), 3).ok
    z = cp.sqrt_point(Q, 2)
    assert cp.apart(z, z, 8).status is Status.UNKNOWN
    assert cp.apart(z, cp.sqrt_point(Q, 3), 4).ok


def test_mismatched_spaces_rejected(Q, D1):
    with pytest.raises(ValueError):
        cp.point_dist(cp.embed(Q, 0), cp.embed(D1, 0), 3)
    with pytest.raises(ValueError):
        cp.apart(cp.embed(Q, 0), cp.embed(D1, 0), 3)


def test_explicit_point_depth(Q):
    z = cp.explicit_point(Q, [1, 3, 7])
    assert z.at(2) == 7
    with pytest.raises(cp.DepthExceeded):
        z.at(3)
    assert cp.apart(z, cp.embed(Q, 0), 2).status is Status.UNKNOWN


def test_negated_point(Q):
    z = cp.negated(cp.sqrt_point(Q, 2))
    assert en.rational_enumeration(z.at(10)) < 0
    assert cp.point_dist(cp.negated(z), cp.sqrt_point(Q, 2), 15) <= eps(15)


def test_memoised_access_is_deterministic(Q):
    calls = []

    def seq(k):
        calls.append(k)
        return k % 3

    z = cp.CauchyPoint(Q, seq)
    assert [z.at(4), z.at(4)] == [1, 1]
    assert calls == [4]
