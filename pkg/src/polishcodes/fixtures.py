"""Line-oriented fixture files declaring codes, points and function codes.

::

    code T
    kind table
    row 0 0
    row 1 1 0

    point r2
    space Q
    rule sqrt 2

    fn dbl
    dom Q
    cod Q
    map builtin scale 2
    modulus radius inf shift 1
    rangebound linear 2 0

Blank lines and ``#`` comments are ignored. Table rows list the lower
triangle, ``row i d(i,0) ... d(i,i)``; a table whose rows all start with 0 but
do not all end with 0 is read diagonal first, ``row i d(i,i) ... d(i,0)``. Rationals are written ``p/q`` in lowest
terms, or ``p`` when integral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

from . import codes as mc
from . import completion as cp
from . import functions as fn
from .reals import QuadraticIrrational

_RATIONAL = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_rational(token: str) -> Fraction:
    """Strict rational syntax: lowest terms, positive denominator, no ``/1``."""
    m = _RATIONAL.match(token)
    if not m:
        raise ValueError(f"malformed rational {token!r}")
    sign, p, q = m.groups()
    p = int(p)
    if q is None:
        if sign and p == 0:
            raise ValueError(f"malformed rational {token!r}")
        return Fraction(-p if sign else p)
    q = int(q)
    if q == 1 or gcd(p, q) != 1:
        raise ValueError(f"rational {token!r} is not in lowest terms")
    if p == 0:
        raise ValueError(f"malformed rational {token!r}")
    return Fraction(-p if sign else p, q)


def builtin_catalog() -> dict[str, callable]:
    """Codes available by name without declaring them."""
    return {
        "rational_line": mc.rational_line,
        "dyadic_line": mc.dyadic_line,
        "shifted_line": lambda: mc.shifted_line("sqrt(2)"),
        "baire": mc.baire,
        "cantor": lambda: mc.product([2]),
        "discrete": mc.discrete,
        "geometric": mc.geometric,
        "euclidean_list": mc.euclidean_list,
    }


_BLOCK_KEYS = {
    "code": {"kind", "generator", "param", "row"},
    "point": {"space", "rule"},
    "fn": {"dom", "cod", "map", "modulus", "rangebound"},
}

_FAMILY_PARAMS = {
    "rational_line": set(),
    "dyadic_line": set(),
    "shifted_line": {"offset"},
    "product": {"sizes"},
    "discrete": {"size"},
    "geometric": set(),
    "euclidean_list": set(),
}


@dataclass
class _Block:
    kind: str
    name: str
    line: int
    entries: list = field(default_factory=list)  # (line, key, args)


@dataclass
class Catalog:
    codes: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)

    def names(self) -> set[str]:
        return set(self.codes) | set(self.points) | set(self.functions)

    def code(self, name: str) -> mc.MetricCode:
        if name not in self.codes:
            factory = builtin_catalog().get(name)
            if factory is None:
                raise KeyError(f"unknown code {name!r}")
            self.codes[name] = factory()
        return self.codes[name]

    def point(self, name: str) -> cp.CauchyPoint:
        try:
            return self.points[name]
        except KeyError:
            raise KeyError(f"unknown point {name!r}") from None

    def function(self, name: str) -> fn.FunctionCode:
        try:
            return self.functions[name]
        except KeyError:
            raise KeyError(f"unknown function code {name!r}") from None

    def merge(self, other: Catalog) -> None:
        clash = self.names() & other.names()
        if clash:
            raise ValueError(f"duplicate names across fixtures: {sorted(clash)}")
        self.codes.update(other.codes)
        self.points.update(other.points)
        self.functions.update(other.functions)


def _blocks(text: str) -> list[_Block]:
    blocks: list[_Block] = []
    seen: dict[str, int] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key in _BLOCK_KEYS:
            if len(args) != 1:
                raise ParseError(lineno, f"'{key}' takes exactly one name")
            name = args[0]
            if name in seen:
                raise ParseError(lineno, f"duplicate name {name!r} (first at line {seen[name]})")
            seen[name] = lineno
            current = _Block(key, name, lineno)
            blocks.append(current)
            continue
        if current is None:
            raise ParseError(lineno, f"'{key}' outside of any declaration")
        if key not in _BLOCK_KEYS[current.kind]:
            raise ParseError(lineno, f"unknown key {key!r} in {current.kind} block")
        current.entries.append((lineno, key, args))
    return blocks


def _single(block: _Block, key: str, required: bool = True):
    hits = [e for e in block.entries if e[1] == key]
    if len(hits) > 1:
        raise ParseError(hits[1][0], f"'{key}' given twice")
    if not hits:
        if required:
            raise ParseError(block.line, f"{block.kind} {block.name!r} lacks '{key}'")
        return None
    return hits[0]


def _rat(lineno: int, token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def _build_code(block: _Block) -> mc.MetricCode:
    lineno, _, args = _single(block, "kind")
    if len(args) != 1 or args[0] not in ("builtin", "table", "pseudo-table"):
        raise ParseError(lineno, "kind must be builtin, table or pseudo-table")
    kind = args[0]
    if kind == "builtin":
        if any(e[1] == "row" for e in block.entries):
            raise ParseError(block.line, "builtin codes take no rows")
        gl, _, gargs = _single(block, "generator")
        if len(gargs) != 1 or gargs[0] not in _FAMILY_PARAMS:
            raise ParseError(gl, f"unknown generator {' '.join(gargs)!r}")
        family = gargs[0]
        params = {}
        for pl, _, pargs in (e for e in block.entries if e[1] == "param"):
            if len(pargs) != 2:
                raise ParseError(pl, "param takes a key and a value")
            pkey, pval = pargs
            if pkey not in _FAMILY_PARAMS[family]:
                raise ParseError(pl, f"unknown parameter {pkey!r} for {family}")
            if pkey in params:
                raise ParseError(pl, f"parameter {pkey!r} given twice")
            try:
                if pkey == "offset":
                    params[pkey] = QuadraticIrrational.parse(pval)
                elif pkey == "size":
                    params[pkey] = int(_rat(pl, pval))
                else:
                    params[pkey] = pval
            except ValueError as exc:
                raise ParseError(pl, str(exc)) from None
        try:
            code = mc.make_builtin(family, **params)
        except ValueError as exc:
            raise ParseError(gl, str(exc)) from None
    else:
        if _single(block, "generator", required=False) or any(e[1] == "param" for e in block.entries):
            raise ParseError(block.line, "tables take rows, not generators or params")
        rows: dict[int, list[Fraction]] = {}
        for rl, _, rargs in (e for e in block.entries if e[1] == "row"):
            if not rargs:
                raise ParseError(rl, "row needs an index")
            try:
                i = int(rargs[0])
            except ValueError:
                raise ParseError(rl, f"bad row index {rargs[0]!r}") from None
            if i in rows:
                raise ParseError(rl, f"row {i} given twice")
            if len(rargs) - 1 != i + 1:
                raise ParseError(rl, f"row {i} needs {i + 1} entries")
            rows[i] = [_rat(rl, t) for t in rargs[1:]]
        if not rows or sorted(rows) != list(range(len(rows))):
            raise ParseError(block.line, "table rows must be 0..n-1")
        ordered = [rows[i] for i in range(len(rows))]
        if any(r[-1] != 0 for r in ordered) and all(r[0] == 0 for r in ordered):
            # rows written diagonal first: row i d(i,i) d(i,i-1) ... d(i,0)
            ordered = [r[::-1] for r in ordered]
        try:
            code = mc.finite_table(ordered,
                                   pseudometric=kind == "pseudo-table", name=block.name)
        except ValueError as exc:
            raise ParseError(block.line, str(exc)) from None
    # keep the declared name; the oracle is shared
    return replace(code, name=block.name)


def _resolve_code(catalog: Catalog, lineno: int, name: str) -> mc.MetricCode:
    try:
        return catalog.code(name)
    except KeyError:
        raise ParseError(lineno, f"unresolved code reference {name!r}") from None


def _build_point(block: _Block, catalog: Catalog) -> cp.CauchyPoint:
    sl, _, sargs = _single(block, "space")
    if len(sargs) != 1:
        raise ParseError(sl, "space takes one code name")
    space = _resolve_code(catalog, sl, sargs[0])
    rl, _, rargs = _single(block, "rule")
    if not rargs:
        raise ParseError(rl, "empty rule")
    rule, rest = rargs[0], rargs[1:]
    try:
        if rule == "constant" and len(rest) == 1:
            z = cp.embed(space, int(rest[0]))
        elif rule == "geometric-limit" and not rest:
            z = cp.geometric_limit(space)
        elif rule == "sqrt" and len(rest) == 1:
            z = cp.sqrt_point(space, int(rest[0]))
        elif rule == "explicit" and rest:
            z = cp.explicit_point(space, [int(t) for t in rest])
        else:
            raise ParseError(rl, f"malformed rule {' '.join(rargs)!r}")
    except (ValueError, IndexError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(rl, str(exc)) from None
    z.label = block.name
    return z


def _build_map(lineno: int, args: list[str], dom: mc.MetricCode):
    if not args:
        raise ParseError(lineno, "empty map")
    mode, rest = args[0], args[1:]
    try:
        if mode == "table":
            if not rest or len(rest) % 2:
                raise ParseError(lineno, "map table takes index pairs")
            ints = [int(t) for t in rest]
            return fn.table_map(list(zip(ints[::2], ints[1::2])))
        if mode != "builtin" or not rest:
            raise ParseError(lineno, "map must be 'builtin <family>' or 'table <i> <j> ...'")
        family, params = rest[0], rest[1:]
        if family == "identity" and not params:
            return lambda i: i
        if family == "negation" and not params:
            return fn.negation_code(dom).g
        if family == "scale" and len(params) == 1:
            return fn.scaling_code(dom, _rat(lineno, params[0])).g
        if family == "square" and not params:
            return fn.squaring_code(dom).g
        if family == "swap" and len(params) == 2:
            return fn.swap_map(int(params[0]), int(params[1]))
        raise ParseError(lineno, f"unknown map {' '.join(rest)!r}")
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def _build_function(block: _Block, catalog: Catalog) -> fn.FunctionCode:
    dl, _, dargs = _single(block, "dom")
    cl, _, cargs = _single(block, "cod")
    if len(dargs) != 1 or len(cargs) != 1:
        raise ParseError(dl, "dom and cod take one code name each")
    dom = _resolve_code(catalog, dl, dargs[0])
    cod = _resolve_code(catalog, cl, cargs[0])
    ml, _, margs = _single(block, "map")
    g = _build_map(ml, margs, dom)
    entries = []
    for ol, _, oargs in (e for e in block.entries if e[1] == "modulus"):
        if len(oargs) != 4 or oargs[0] != "radius" or oargs[2] != "shift":
            raise ParseError(ol, "modulus lines read 'modulus radius <R> shift <s>'")
        radius = None if oargs[1] == "inf" else _rat(ol, oargs[1])
        try:
            shift = int(oargs[3])
        except ValueError:
            raise ParseError(ol, f"bad shift {oargs[3]!r}") from None
        entries.append((radius, shift))
    modulus = None
    if entries:
        try:
            modulus = fn.step_modulus(entries)
        except ValueError as exc:
            raise ParseError(block.line, str(exc)) from None
    range_bound = None
    hit = _single(block, "rangebound", required=False)
    if hit is not None:
        bl, _, bargs = hit
        if len(bargs) != 3 or bargs[0] != "linear":
            raise ParseError(bl, "rangebound reads 'rangebound linear <a/b> <c>'")
        slope, intercept = _rat(bl, bargs[1]), _rat(bl, bargs[2])
        range_bound = lambda R, a=slope, c=intercept: a * Fraction(R) + c  # noqa: E731
    try:
        return fn.make_function_code(g, dom, cod, modulus, range_bound, name=block.name)
    except ValueError as exc:
        raise ParseError(block.line, str(exc)) from None


def parse_code_file(text: str, catalog: Catalog | None = None) -> Catalog:
    """Parse a fixture into a catalog; references may point forward or to builtins."""
    blocks = _blocks(text)
    out = Catalog()
    if catalog is not None:
        clash = catalog.names() & {b.name for b in blocks}
        if clash:
            raise ParseError(min(b.line for b in blocks if b.name in clash),
                             f"duplicate names across fixtures: {sorted(clash)}")
        out.codes.update(catalog.codes)
        out.points.update(catalog.points)
        out.functions.update(catalog.functions)
    for b in blocks:
        if b.kind == "code":
            out.codes[b.name] = _build_code(b)
    for b in blocks:
        if b.kind == "point":
            out.points[b.name] = _build_point(b, out)
    for b in blocks:
        if b.kind == "fn":
            out.functions[b.name] = _build_function(b, out)
    return out
