from fractions import Fraction

import pytest

from polishcodes import codes as mc
from polishcodes import enumerations as en
from polishcodes.reals import QuadraticIrrational, eps, sqrt_interval
from polishcodes.verdict import Status

ALL_FAMILIES = ["rational_line", "dyadic_line", "shifted_line", "product", "discrete",
                "geometric", "euclidean_list"]


def test_discrete_distance(D1):
    assert mc.dist(D1, 3, 5, 10) == 1


def test_diagonal_is_zero():
    for family in ALL_FAMILIES:
        assert mc.dist(mc.make_builtin(family), 4, 4, 30) == 0


def test_geometric_distance(D2):
    assert mc.dist(D2, 1, 2, 20) == Fraction(1, 4)
    assert D2.dist(2, 1, 0) == Fraction(1, 4)


def test_rational_line_distance_is_precision_free(Q):
    assert {Q.dist(0, 1, k) for k in range(40)} == {1}
    assert Q.dist(3, 5, 0) == Fraction(3, 2)


def test_baire_first_difference():
    B = mc.baire()
    i = en.finite_seq_index((1, 2, 3))
    j = en.finite_seq_index((1, 2, 4))
    l = en.finite_seq_index((1, 2))
    assert B.dist(i, j, 5) == Fraction(1, 4)
    assert B.dist(i, l, 5) == Fraction(1, 4)
    assert B.dist(0, en.finite_seq_index((0, 0, 0, 7)), 0) == Fraction(1, 8)


def test_euclidean_distance_against_interval():
    E = mc.euclidean_list()
    (x0, y0), (x1, y1) = E.coordinate(0), E.coordinate(1)
    assert (x0, x1) == (1, Fraction(1, 2))
    sq = (x0 - x1) ** 2 + (y0 - y1) ** 2
    for k in (0, 5, 20, 40):
        lo, hi = sqrt_interval(sq, k + 4)
        v = E.dist(0, 1, k)
        assert lo - eps(k) <= v <= hi + eps(k)


def test_shifted_line_points():
    S = mc.shifted_line("sqrt(2)")
    assert not S.exact
    x = S.coordinate(1)
    assert isinstance(x, QuadraticIrrational)
    assert S.dist(0, 1, 10) == 1


def test_finite_code_index_range():
    T = mc.finite_table([[0], [1, 0]])
    with pytest.raises(IndexError):
        T.dist(0, 2, 3)
    with pytest.raises(IndexError):
        mc.discrete(3).dist(5, 0, 1)


@pytest.mark.parametrize("bad", [[[1]], [[0, 1], [2, 0]], [[0, 1, 2], [1, 0]]])
def test_malformed_tables_rejected(bad):
    with pytest.raises(ValueError):
        mc.finite_table(bad)


def test_make_builtin_table_and_unknown_family():
    T = mc.make_builtin("finite_table", matrix=[[0], [2, 0]])
    assert T.dist(0, 1, 0) == 2
    with pytest.raises(ValueError):
        mc.make_builtin("hilbert_cube")


@pytest.mark.parametrize("family", ALL_FAMILIES)
def test_builtins_pass_verify_metric(family):
    v = mc.verify_metric(mc.make_builtin(family), 32, 20)
    assert v.status is Status.HOLDS, v


def test_verify_metric_examples(D1):
    assert mc.verify_metric(D1, 16, 10).ok
    bad = mc.finite_table([[0], [1, 0], [5, 1, 0]])
    v = mc.verify_metric(bad, 3, 10)
    assert v.failed
    assert v.witness["axiom"] == "triangle"
    assert v.witness["indices"] == (0, 1, 2)


def test_verify_metric_indiscernibility():
    twin = mc.finite_table([[0], [0, 0]])
    assert mc.verify_metric(twin, 2, 5).witness["axiom"] == "indiscernibility"
    assert mc.verify_metric(mc.finite_table([[0], [0, 0]], pseudometric=True), 2, 5).ok
    close = mc.MetricCode("close", lambda i, j, k: Fraction(1, 2 ** 30), size=2)
    v = mc.verify_metric(close, 2, 10)
    assert v.status is Status.UNKNOWN
    assert v.witness["pairs"] == ((0, 1),)


def test_baire_ultrametric_brute_force():
    B = mc.baire()
    assert mc.verify_metric(B, 8, 20).ok
    n = 64
    d = [[B.dist(i, j, 20) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                assert d[i][l] <= max(d[i][j], d[j][l])


def test_cantor_product_is_binary():
    C = mc.product([2])
    assert C.coordinate(5) == (1, 0, 1)
    assert mc.verify_metric(C, 32, 10).ok
    finite = mc.product([2, 3, 1])
    assert finite.size == 6
    assert mc.verify_metric(finite, 6, 10).ok


def test_separation_oracles(Q, D1, D2):
    assert D1.separation_at(3) == mc.IsolatedWith(Fraction(1))
    assert D2.separation_at(2).delta == Fraction(1, 8)
    E = mc.euclidean_list()
    assert E.separation_at(4).delta == Fraction(1, 30)
    stream = Q.separation_at(0).stream
    for k in range(12):
        j = stream(k)
        assert j != 0 and Q.dist(0, j, k) <= eps(k)


def test_describe_mentions_flags(Q):
    text = Q.describe()
    assert "exact" in text and "family=rational_line" in text
