# Points of the completion: fast Cauchy sequences of indices.
from polishcodes import codes as mc
from polishcodes import completion as cp

Q = mc.rational_line()
r2 = cp.sqrt_point(Q, 2)
r8 = cp.sqrt_point(Q, 8)

# entries are rationals q_k with |q_k - sqrt 2| small
for k in (0, 4, 8, 16):
    print(k, Q.coordinate(r2.at(k)))

# distances between points come from the entries at k+2
print(float(cp.point_dist(r2, r8, 20)))  # sqrt 2

# apartness is semi-decidable: it can hold, but never fail
print(cp.apart(r2, r8, 4).status.value)
print(cp.apart(r2, cp.sqrt_point(Q, 2), 12).status.value)

# the geometric code has a limit point that is not in the code
G = mc.geometric()
lim = cp.geometric_limit(G)
print([str(cp.point_dist(lim, cp.embed(G, n), 20)) for n in range(5)])

# a sequence that is not fast Cauchy is rejected when inspected
try:
    cp.make_point(mc.discrete(), lambda k: k, 4)
except cp.ModulusViolation as e:
    print("rejected:", e)
