# Function codes: maps on indices together with a modulus of continuity.
from polishcodes import codes as mc
from polishcodes import completion as cp
from polishcodes import functions as fn

Q = mc.rational_line()
dbl = fn.doubling_code(Q)
print(fn.check_modulus(dbl, 64, 10).status.value)

# extending to the completion: 2 * sqrt 2
w = fn.eval_extension(dbl, cp.sqrt_point(Q, 2))
print(float(Q.coordinate(w.at(20))))

# squaring needs a modulus that grows with the radius
sq = fn.squaring_code(Q)
z = fn.eval_extension(sq, cp.sqrt_point(Q, 3))
print(float(Q.coordinate(z.at(16))))

# composing two maps composes the moduli
quad = fn.compose(sq, dbl)
print(float(Q.coordinate(fn.eval_extension(quad, cp.sqrt_point(Q, 2)).at(10))))

# the identity from omega+1 onto a discrete space is continuous on indices,
# but the limit point has no image: the battery stage catches it
G, N = mc.geometric(), mc.discrete()
up = fn.make_function_code(lambda i: i, G, N, None, None, name="up")
down = fn.make_function_code(lambda i: i, N, G, None, None, name="down")
v = fn.check_homeo_pair(up, down, 16, 10, [cp.geometric_limit(G)])
print(v.status.value, v.witness["stage"])
