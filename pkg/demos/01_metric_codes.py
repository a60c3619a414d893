# Metric codes: distance oracles on indices, queried at a precision k.
from fractions import Fraction

from polishcodes import codes as mc
from polishcodes import enumerations as en

Q = mc.rational_line()
print(Q.describe())

# the first few rationals in enumeration order
print([str(en.rational_enumeration(i)) for i in range(9)])

# exact codes answer the same at every precision
print(Q.dist(3, 7, 0), Q.dist(3, 7, 40))

# the shifted line is flagged approximate (points are q + sqrt 2),
# but inside it the shift cancels and distances come out rational
S = mc.shifted_line("sqrt(2)")
for k in (2, 8, 20):
    print(k, S.dist(0, 5, k), float(S.dist(0, 5, k)))

# bounded axiom checks
for family in ("rational_line", "dyadic_line", "shifted_line", "product",
               "discrete", "geometric", "euclidean_list"):
    print(family, mc.verify_metric(mc.make_builtin(family), 16, 10).status.value)

# a table breaking the triangle inequality gets a witness
bad = mc.finite_table([[0], [1, 0], [5, 1, 0]])
print(mc.verify_metric(bad, 3, 10).describe())

# indices are plain ints, so a rational maps back to its index exactly
print(en.rational_index(Fraction(-3, 7)))
