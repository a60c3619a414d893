"""Command-line front end for the bounded verifiers.

Every report ends with ``verdict: holds|fails|unknown``. Exit codes: 0 holds
or witness found, 1 fails or refuted, 2 unknown or nothing found up to the
bound, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import codes as mc
from . import completion as cp
from . import functions as fn
from . import isometry as iso
from . import topology as tp
from .fixtures import Catalog, ParseError, builtin_catalog, parse_code_file, parse_rational
from .verdict import Status, Verdict, format_rational, render

EXIT = {Status.HOLDS: 0, Status.FAILS: 1, Status.UNKNOWN: 2}
USAGE_ERROR = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _catalog(paths) -> Catalog:
    cat = Catalog()
    for path in paths or ():
        text = Path(path).read_text(encoding="utf-8")
        try:
            cat = parse_code_file(text, cat)
        except ParseError as exc:
            raise ParseError(exc.line, f"{path}: {exc.args[0].split(': ', 1)[1]}") from None
    return cat


def _lookup(getter, name):
    try:
        return getter(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _subset(code: mc.MetricCode, text: str):
    if text == "all":
        return iso.everything()
    if text == "even":
        return iso.parity_subset(code, 0)
    if text == "odd":
        return iso.parity_subset(code, 1)
    if text in ("nonnegative", "nonpositive"):
        return iso.halfline_subset(code, text)
    if text.startswith("mod:"):
        m, r = (int(t) for t in text[4:].split(":"))
        return iso.IndexSubset(lambda i: i % m == r, label=text)
    if text.startswith("set:"):
        members = frozenset(int(t) for t in text[4:].split(","))
        return iso.IndexSubset(members.__contains__, label=text)
    raise UsageError(f"unknown subset {text!r}")


def _cross(A, B, text: str):
    if text == "line":
        return iso.line_cross(A, B)
    if text.startswith("const:"):
        return iso.constant_cross(parse_rational(text[6:]))
    raise UsageError(f"unknown cross oracle {text!r}")


def _witness(text: str, source, target):
    if text == "identity":
        if source is not target:
            raise UsageError("identity witness needs the same code on both sides")
        return iso.identity_witness(source)
    if text == "dyadic-into-rational":
        return iso.dyadic_into_rational(source, target)
    raise UsageError(f"unknown witness {text!r}")


def _index_text(code: mc.MetricCode, j: int) -> str:
    """An index, abbreviated when long; line codes also show the coordinate."""
    digits = str(j)
    text = digits if len(digits) <= 40 else f"[{len(digits)}-digit index]"
    if code.coordinate is not None and code.family in ("rational_line", "dyadic_line"):
        text += f" at {render(code.coordinate(j))}"
    return text


def _finish(lines, verdict: Verdict):
    lines.append("detail: " + verdict.describe())
    lines.append(f"verdict: {verdict.status.value}")
    return EXIT[verdict.status], lines


# -- commands ---------------------------------------------------------------

def cmd_verify_metric(cat, a):
    code = _lookup(cat.code, a.code)
    v = mc.verify_metric(code, a.depth, a.precision)
    return _finish([f"code: {code.describe()}"], v)


def cmd_isolated(cat, a):
    code = _lookup(cat.code, a.code)
    r = tp.isolated_at(code, a.index, a.depth, a.precision)
    lines = [f"code: {code.describe()}", f"index: {a.index}"]
    bounds = {"index": a.index, "depth": a.depth, "k": a.precision}
    if isinstance(r, mc.IsolatedWith):
        lines.append(f"isolated-with: {format_rational(r.delta)}")
        v = Verdict.holds(bounds, "isolated")
    elif isinstance(r, tp.NotIsolatedUpTo):
        lines.append("not-isolated-up-to: " + str(r.k))
        lines.extend(f"approximant {m} {_index_text(code, j)}" for m, j in enumerate(r.witnesses))
        v = Verdict.fails({"approximants": len(r.witnesses)}, bounds, "not isolated")
    else:
        v = Verdict.unknown(bounds, "isolation unresolved")
    return _finish(lines, v)


def cmd_perfect(cat, a):
    code = _lookup(cat.code, a.code)
    return _finish([f"code: {code.describe()}"], tp.perfect_check(code, a.depth, a.precision))


def cmd_find_isometry(cat, a):
    A, B = _lookup(cat.code, a.source), _lookup(cat.code, a.target)
    r = iso.search_isometry(A, B, a.size, a.eps, a.bound)
    lines = [f"source: {A.describe()}", f"target: {B.describe()}"]
    bounds = {"size": a.size, "eps": a.eps, "bound": a.bound}
    if isinstance(r, iso.PartialIsometry):
        lines.extend(f"pair {i} {j}" for i, j in r.pairs)
        check = iso.check_partial_isometry(r, a.eps + 2)
        lines.append("recheck: " + check.status.value)
        v = Verdict.holds(bounds, "witness found")
    else:
        lines.append(f"none-up-to: {r.bound} ({r.reason}, explored {r.explored})")
        v = Verdict.unknown(bounds, "no witness below the bound")
    return _finish(lines, v)


def cmd_density(cat, a):
    code = _lookup(cat.code, a.code)
    subset = _subset(code, a.subset)
    region = None if a.region is None else _subset(code, a.region)
    v = iso.density_check(code, subset, a.size, a.precision, a.bound, region=region)
    lines = [f"code: {code.describe()}", f"subset: {a.subset}"]
    if a.region is not None:
        lines.append(f"region: {a.region}")
    return _finish(lines, v)


def cmd_amalgamate(cat, a):
    A, B = _lookup(cat.code, a.left), _lookup(cat.code, a.right)
    try:
        cross = _cross(A, B, a.cross)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    am = iso.amalgamate(A, B, cross)
    lines = [f"amalgam: {am.describe()}"]
    n = min(a.depth, 6)
    for i in range(n):
        row = " ".join(format_rational(am.dist(i, j, a.precision)) for j in range(i + 1))
        lines.append(f"row {i} {row}")
    return _finish(lines, mc.verify_metric(am, a.depth, a.precision))


def cmd_check_function(cat, a):
    f = _lookup(cat.function, a.function)
    return _finish([f"function: {f.name} {f.dom.name} -> {f.cod.name}"],
                   fn.check_modulus(f, a.depth, a.precision))


def cmd_battery(cat, a):
    f = _lookup(cat.function, a.function)
    pts = [_lookup(cat.point, p) for p in a.point]
    v = fn.battery_check(f, pts, a.depth)
    return _finish([f"function: {f.name}", "battery: " + " ".join(a.point)], v)


def cmd_eval_ext(cat, a):
    f = _lookup(cat.function, a.function)
    z = _lookup(cat.point, a.point)
    lines = [f"function: {f.name}", f"point: {a.point}"]
    bounds = {"k": a.precision}
    try:
        w = fn.eval_extension(f, z)
        idx = w.at(a.precision)
        lines.append(f"approximant {a.precision}: index {idx}")
        if f.cod.coordinate is not None:
            lines.append(f"coordinate: {render(f.cod.coordinate(idx))}")
        if a.against is None:
            v = Verdict.holds(bounds, "evaluated")
        else:
            ref = _lookup(cat.point, a.against)
            d = cp.point_dist(w, ref, a.precision)
            lines.append(f"distance to {a.against}: {format_rational(d)}")
            if d <= Fraction(1, 1 << a.precision):
                v = Verdict.holds(bounds, "agrees at scale")
            elif d > Fraction(2, 1 << a.precision):
                v = Verdict.fails({"distance": d}, bounds, "apart")
            else:
                v = Verdict.unknown(bounds, "neither close nor apart")
    except cp.DepthExceeded as exc:
        v = Verdict.unknown(bounds | {"depth": exc.depth}, "point data exhausted")
    except cp.ModulusViolation as exc:
        v = Verdict.fails({"pair": (exc.k, exc.m), "value": exc.value}, bounds, "modulus violation")
    except fn.RadiusNotCovered as exc:
        v = Verdict.unknown(bounds, str(exc))
    return _finish(lines, v)


def cmd_check_cdi(cat, a):
    f0, f1 = _lookup(cat.function, a.fn0), _lookup(cat.function, a.fn1)
    w = fn.CdiWitness(_witness(a.iota, f0.dom, f1.dom),
                      _witness(a.iota_prime, f0.cod, f1.cod))
    v = fn.check_cdi_witness(f0, f1, w, a.depth, a.precision)
    return _finish([f"functions: {f0.name} {f1.name}"], v)


def cmd_check_homeo(cat, a):
    f, h = _lookup(cat.function, a.function), _lookup(cat.function, a.inverse)
    bat = [_lookup(cat.point, p) for p in a.point]
    inv = [_lookup(cat.point, p) for p in a.inverse_point]
    try:
        v = fn.check_homeo_pair(f, h, a.depth, a.precision, bat, inv, depth=a.battery_depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"pair: {f.name} {h.name}"]
    for stage, sv in (v.witness or {}).get("checks", {}).items():
        lines.append(f"stage {stage}: {sv.status.value}")
    return _finish(lines, v)


def cmd_examples(cat, a):
    lines = [f"builtin {name}: {factory().describe()}"
             for name, factory in sorted(builtin_catalog().items())]
    lines.append("families: " + " ".join(sorted(mc.FAMILIES)))
    return _finish(lines, Verdict.holds({"builtins": len(builtin_catalog())}))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-f", "--fixture", action="append", default=[],
                        help="fixture file declaring codes, points and function codes")
    p = _Parser(prog="polishcodes", description=__doc__.splitlines()[0])
    p.add_argument("-f", "--fixture", dest="global_fixture", action="append", default=[],
                   help="fixture file (may also be given after the command)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *args):
        sp = sub.add_parser(name, parents=[common])
        sp.set_defaults(func=func)
        for a in args:
            a(sp)
        return sp

    def depth(sp, default=None):
        sp.add_argument("--depth", type=int, required=default is None, default=default)

    def prec(sp):
        sp.add_argument("--precision", type=int, required=True)

    sp = add("verify-metric", cmd_verify_metric, depth, prec)
    sp.add_argument("code")
    sp = add("isolated", cmd_isolated, depth, prec)
    sp.add_argument("code")
    sp.add_argument("--index", type=int, required=True)
    sp = add("perfect", cmd_perfect, depth, prec)
    sp.add_argument("code")
    sp = add("find-isometry", cmd_find_isometry)
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--eps", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp = add("density", cmd_density, prec)
    sp.add_argument("code")
    sp.add_argument("--subset", required=True)
    sp.add_argument("--region", help="only check indices in this subset")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp = add("amalgamate", cmd_amalgamate, depth, prec)
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--cross", required=True)
    sp = add("check-function", cmd_check_function, depth, prec)
    sp.add_argument("function")
    sp = add("battery", cmd_battery, depth)
    sp.add_argument("function")
    sp.add_argument("--point", action="append", required=True)
    sp = add("eval-ext", cmd_eval_ext, prec)
    sp.add_argument("function")
    sp.add_argument("--point", required=True)
    sp.add_argument("--against")
    sp = add("check-cdi", cmd_check_cdi, depth, prec)
    sp.add_argument("fn0")
    sp.add_argument("fn1")
    sp.add_argument("--iota", required=True)
    sp.add_argument("--iota-prime", required=True)
    sp = add("check-homeo", cmd_check_homeo, depth, prec)
    sp.add_argument("function")
    sp.add_argument("inverse")
    sp.add_argument("--point", action="append", default=[])
    sp.add_argument("--inverse-point", action="append", default=[])
    sp.add_argument("--battery-depth", type=int)
    add("examples", cmd_examples)
    return p


def run_command(argv) -> tuple[int, str, str]:
    """Run one command; returns ``(exit_code, stdout_text, stderr_text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        cat = _catalog(args.global_fixture + args.fixture)
        code, lines = args.func(cat, args)
    except (UsageError, ParseError, OSError, IndexError, ValueError) as exc:
        return USAGE_ERROR, "", f"error: {exc}\n"
    return code, "\n".join(lines) + "\n", ""


def main(argv=None) -> int:
    code, out, err = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
