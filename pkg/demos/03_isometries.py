# Bounded isometry search, density of subsets, and amalgams.
from polishcodes import codes as mc
from polishcodes import isometry as iso

Dy, Q, B = mc.dyadic_line(), mc.rational_line(), mc.baire()

# the first 8 dyadics embed into the rationals up to 2^-6
found = iso.search_isometry(Dy, Q, 8, 6, 10**4)
print(found.pairs)
print(iso.check_partial_isometry(found, found.slack).status.value)

# the Baire code is an ultrametric of diameter 1; three rationals do not fit
print(iso.search_isometry(Q, B, 3, 3, 1000))

# density: the even indices of Q miss a ball
print(iso.density_check(Q, iso.parity_subset(Q, 0), 2, 1, 500).describe())

# gluing Q to Q + sqrt 2 along the real line
S = mc.shifted_line("sqrt(2)")
am = iso.amalgamate(Q, S, iso.line_cross(Q, S))
print(mc.verify_metric(am, 24, 12).status.value)
print(float(am.dist(0, 1, 20)))  # |0 - sqrt 2|

# a cross distance that is too small breaks the triangle inequality
bad = iso.amalgamate(mc.discrete(), mc.geometric(), iso.constant_cross("1/8"))
print(mc.verify_metric(bad, 16, 10).describe())
