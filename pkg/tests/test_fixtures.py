from fractions import Fraction

import pytest

from polishcodes import completion as cp
from polishcodes import enumerations as en
from polishcodes.codes import verify_metric
from polishcodes.fixtures import ParseError, parse_code_file, parse_rational


def test_builtin_declaration():
    cat = parse_code_file("code Q\nkind builtin\ngenerator rational_line\n")
    Q = cat.code("Q")
    assert Q.exact and Q.name == "Q"
    assert Q.dist(0, 1, 3) == 1


def test_table_rows_both_orders():
    literal = parse_code_file("code T\nkind table\nrow 0 0\nrow 1 1 0\nrow 2 5 1 0\n").code("T")
    diagonal_first = parse_code_file("code T\nkind table\nrow 2 0 1 5\nrow 1 0 1\nrow 0 0\n").code("T")
    for T in (literal, diagonal_first):
        assert T.dist(0, 2, 0) == 5 and T.dist(1, 2, 0) == 1
        v = verify_metric(T, 3, 10)
        assert v.failed and v.witness["indices"] == (0, 1, 2)


@pytest.mark.parametrize("token, value", [("3", 3), ("-7/2", Fraction(-7, 2)), ("0", 0)])
def test_rationals(token, value):
    assert parse_rational(token) == value


@pytest.mark.parametrize("token", ["2/4", "3/1", "-0", "1/0", "1.5", "+2", "04", "1/-2"])
def test_malformed_rationals(token):
    with pytest.raises(ValueError):
        parse_rational(token)


def test_malformed_rational_in_file_reports_line():
    with pytest.raises(ParseError) as err:
        parse_code_file("code T\nkind table\nrow 0 0\nrow 1 2/4 0\n")
    assert err.value.line == 4


@pytest.mark.parametrize("text, line", [
    ("code A\nkind builtin\ngenerator hilbert\n", 3),
    ("code A\nkind builtin\ngenerator discrete\ncolour red\n", 4),
    ("kind builtin\n", 1),
    ("code A\nkind builtin\ngenerator discrete\ncode A\nkind builtin\ngenerator discrete\n", 4),
    ("point p\nspace nowhere\nrule constant 0\n", 2),
    ("code A\nkind table\nrow 0 0\nrow 1 1 1\n", 1),
    ("code A\nkind table\nrow 0 0\nrow 2 1 1 0\n", 1),
    ("fn f\ndom rational_line\ncod rational_line\nmap builtin warp\n", 4),
    ("fn f\ndom rational_line\ncod rational_line\nmap builtin identity\nmodulus radius 1 shift x\n", 5),
    ("code A\nkind builtin\ngenerator shifted_line\nparam offset pi\n", 4),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_code_file(text)
    assert err.value.line == line


def test_points_and_functions_resolve_forward_references():
    text = """
    fn dbl            # declared before its codes
    dom Q
    cod Q
    map builtin scale 2
    modulus radius inf shift 1
    rangebound linear 2 0

    point r2
    space Q
    rule sqrt 2

    code Q
    kind builtin
    generator rational_line

    point few
    space Q
    rule explicit 1 3 7
    """
    cat = parse_code_file(text)
    f = cat.function("dbl")
    assert f.dom is cat.code("Q") and cat.point("r2").space is f.dom
    assert en.rational_enumeration(f(3)) == 1
    assert f.range_bound(Fraction(3)) == 6
    assert cat.point("few").depth == 2
    assert cat.point("r2").label == "r2"


def test_builtin_names_are_shared_within_a_catalog():
    cat = parse_code_file("point a\nspace geometric\nrule geometric-limit\n"
                          "point b\nspace geometric\nrule constant 3\n")
    a, b = cat.point("a"), cat.point("b")
    assert abs(cp.point_dist(a, b, 10) - Fraction(1, 8)) <= Fraction(1, 1024)


def test_params():
    cat = parse_code_file("code C\nkind builtin\ngenerator product\nparam sizes 2\n"
                          "code F\nkind builtin\ngenerator discrete\nparam size 4\n"
                          "code S\nkind builtin\ngenerator shifted_line\nparam offset 1/2+3*sqrt(5)\n")
    assert cat.code("C").coordinate(6) == (0, 1, 1)
    assert cat.code("F").size == 4
    assert "sqrt(5)" in cat.code("S").params["offset"]


def test_modulus_steps_and_tables():
    cat = parse_code_file("fn t\ndom discrete\ncod discrete\nmap table 0 1 1 0\n"
                          "modulus radius 1 shift 0\nmodulus radius inf shift 2\n")
    f = cat.function("t")
    assert f(0) == 1 and f.modulus.tau(Fraction(1), 3) == 3 and f.modulus.tau(7, 3) == 5
