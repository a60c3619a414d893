# Isolated indices versus isolated points of the completion.
from fractions import Fraction

from polishcodes import codes as mc
from polishcodes import topology as tp

E = mc.euclidean_list()

# every index of this code is isolated, with an explicit radius
for n in range(5):
    print(n, tp.isolated_at(E, n, 8, 8))
print(tp.perfect_check(E, 8, 5).describe())

# yet the completion holds the segment {0} x [0, 1], and (0, 1/2) is not isolated
z = tp.vertical_limit(E, Fraction(1, 2))
probes = tp.vertical_approach(E, Fraction(1, 2), 10)
print(tp.isolated_in_completion(E, z, probes, 10).describe())

# the rationals have no isolated indices at all
print(tp.perfect_check(mc.rational_line(), 64, 10).status.value)
