"""Golden CLI cases: name, argv, expected exit code."""

L = ["-f", "tests/fixtures/lines.codes"]
O = ["-f", "tests/fixtures/ordinals.codes"]
BOTH = L + O

CASES = [
    ("verify-metric-rational", L + ["verify-metric", "Q", "--depth", "32", "--precision", "20"], 0),
    ("verify-metric-table", O + ["verify-metric", "T", "--depth", "3", "--precision", "10"], 1),
    ("verify-metric-pseudo", O + ["verify-metric", "P", "--depth", "3", "--precision", "10"], 0),
    ("verify-metric-missing-flag", ["verify-metric", "rational_line", "--depth", "4"], 3),
    ("isolated-discrete", ["isolated", "discrete", "--index", "3", "--depth", "10", "--precision", "5"], 0),
    ("isolated-rational-zero", ["isolated", "rational_line", "--index", "0", "--depth", "10000", "--precision", "12"], 1),
    ("isolated-out-of-range", O + ["isolated", "F", "--index", "9", "--depth", "10", "--precision", "5"], 3),
    ("perfect-rational", ["perfect", "rational_line", "--depth", "64", "--precision", "10"], 0),
    ("perfect-discrete", ["perfect", "discrete", "--depth", "1", "--precision", "3"], 1),
    ("perfect-euclidean", ["perfect", "euclidean_list", "--depth", "8", "--precision", "5"], 1),
    ("find-isometry-dyadic", ["find-isometry", "dyadic_line", "rational_line", "--size", "8", "--eps", "6", "--bound", "10000"], 0),
    ("find-isometry-baire", L + ["find-isometry", "Q", "baire", "--size", "3", "--eps", "3", "--bound", "1000"], 2),
    ("find-isometry-unknown-code", ["find-isometry", "Qline", "baire", "--size", "3", "--eps", "3", "--bound", "10"], 3),
    ("density-all", L + ["density", "Q", "--subset", "all", "--size", "16", "--precision", "8", "--bound", "16"], 0),
    ("density-evens", L + ["density", "Q", "--subset", "even", "--size", "2", "--precision", "1", "--bound", "500"], 1),
    ("density-positives-region", L + ["density", "Q", "--subset", "odd", "--region", "nonnegative", "--size", "16", "--precision", "8", "--bound", "1000"], 2),
    ("density-positives-on-positive-region", L + ["density", "Q", "--subset", "odd", "--region", "mod:2:1", "--size", "16", "--precision", "8", "--bound", "1000"], 0),
    ("density-finite-set", L + ["density", "Q", "--subset", "set:0,1,2", "--size", "5", "--precision", "4", "--bound", "100"], 2),
    ("density-bad-subset", L + ["density", "Q", "--subset", "primes", "--size", "5", "--precision", "4", "--bound", "100"], 3),
    ("amalgamate-shifted", L + ["amalgamate", "Q", "S", "--cross", "line", "--depth", "24", "--precision", "12"], 0),
    ("amalgamate-bad-cross", ["amalgamate", "discrete", "geometric", "--cross", "const:1/8", "--depth", "16", "--precision", "10"], 1),
    ("amalgamate-const-one", ["amalgamate", "discrete", "geometric", "--cross", "const:1", "--depth", "16", "--precision", "10"], 0),
    ("amalgamate-malformed-cross", ["amalgamate", "discrete", "geometric", "--cross", "const:2/4", "--depth", "4", "--precision", "4"], 3),
    ("check-function-doubling", L + ["check-function", "dbl", "--depth", "64", "--precision", "10"], 0),
    ("check-function-fraud", L + ["check-function", "fraud", "--depth", "64", "--precision", "3"], 1),
    ("check-function-squaring", L + ["check-function", "sq", "--depth", "128", "--precision", "8"], 0),
    ("check-function-no-modulus", L + ["check-function", "negbare", "--depth", "8", "--precision", "3"], 2),
    ("battery-doubling", L + ["battery", "dbl", "--point", "r2", "--point", "r3", "--depth", "12"], 0),
    ("battery-omega-plus-one", O + ["battery", "up", "--point", "lim", "--depth", "8"], 1),
    ("battery-short-point", L + ["battery", "dbl", "--point", "few", "--depth", "8"], 2),
    ("eval-ext-doubling", L + ["eval-ext", "dbl", "--point", "r2", "--precision", "20", "--against", "r8"], 0),
    ("eval-ext-apart", L + ["eval-ext", "dbl", "--point", "r2", "--precision", "10", "--against", "r2"], 1),
    ("eval-ext-exhausted", L + ["eval-ext", "dbl", "--point", "few", "--precision", "6"], 2),
    ("eval-ext-unknown-point", L + ["eval-ext", "dbl", "--point", "pi", "--precision", "6"], 3),
    ("check-cdi-identity", L + ["check-cdi", "idQ", "idQ", "--iota", "identity", "--iota-prime", "identity", "--depth", "16", "--precision", "8"], 0),
    ("check-cdi-dyadic", L + ["check-cdi", "dblDy", "dbl", "--iota", "dyadic-into-rational", "--iota-prime", "dyadic-into-rational", "--depth", "24", "--precision", "8"], 0),
    ("check-cdi-wrong-square", L + ["check-cdi", "negDy", "dbl", "--iota", "dyadic-into-rational", "--iota-prime", "dyadic-into-rational", "--depth", "24", "--precision", "8"], 1),
    ("check-homeo-omega-plus-one", O + ["check-homeo", "up", "down", "--point", "lim", "--depth", "16", "--precision", "6"], 1),
    ("check-homeo-negation", L + ["check-homeo", "neg", "neg", "--point", "r2", "--inverse-point", "r3", "--depth", "64", "--precision", "10"], 0),
    ("check-homeo-swap", O + ["check-homeo", "swap", "swap", "--depth", "16", "--precision", "8"], 0),
    ("check-homeo-no-modulus", O + ["check-homeo", "swapbare", "swapbare", "--depth", "4", "--precision", "4"], 2),
    ("check-homeo-wrong-direction", BOTH + ["check-homeo", "up", "swap", "--depth", "4", "--precision", "4"], 3),
    ("examples", ["examples"], 0),
    ("examples-with-fixture", L + ["examples"], 0),
    ("parse-error", ["-f", "tests/fixtures/broken.codes", "examples"], 3),
    ("no-command", [], 3),
]


def render(exit_code, out, err):
    return f"exit: {exit_code}\n--- stdout\n{out}--- stderr\n{err}"
