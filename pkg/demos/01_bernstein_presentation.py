"""Walk through the Bernstein presentation of a twisted affine Hecke algebra.

Builds the type-B2 algebra with unequal parameters (lambda = 1 on long
roots, lambda = 2 / lambda* = 1 on the halvable short root), then checks
the three defining relations by exact computation and prints a few
products in the canonical normal form.
"""

from heckealg import (AffineDescriptor, Cocycle, ExtendedGroup, multiply,
                      serialize_element, spread_invariant, build_classical)

b2 = build_classical("B", 2)
wext = ExtendedGroup(b2)
desc = AffineDescriptor(
    b2, wext,
    spread_invariant(b2, wext, {(1, -1): 1, (0, 1): 2}),
    spread_invariant(b2, wext, {(0, 1): 1}),
    Cocycle.trivial(("e",)))

print("B2 datum:", desc.rd)
print("simple roots:", [s.vector for s in b2.simple_roots])
print()

# quadratic relation: N_s^2 = (z^lambda - z^-lambda) N_s + 1
for i, info in enumerate(desc.simple_info):
    ns = desc.n_simple(i)
    sq = multiply(desc, ns, ns)
    print("N_%d^2 =" % (i + 1), serialize_element(desc, sq))
print()

# Bernstein commutation: moving theta past N_s leaves a telescoping tail
th = desc.theta_elem((1, 0))
ns = desc.n_simple(1)   # reflection in the short root e2
lhs = multiply(desc, ns, th)
print("N_2 * theta[1,0]   =", serialize_element(desc, lhs))

th2 = desc.theta_elem((0, 2))
lhs2 = multiply(desc, ns, th2)
print("N_2 * theta[0,2]   =", serialize_element(desc, lhs2))
print()

# the defining relation orientation, verbatim
x = (0, 1)
sx = (0, -1)
rel = multiply(desc, desc.theta_elem(x), ns) - \
    multiply(desc, ns, desc.theta_elem(sx))
print("theta_x N_2 - N_2 theta_{s x} =", serialize_element(desc, rel))
print()

# associativity spot check on a random-ish triple
a = desc.theta_elem((1, -1)) + desc.n_simple(0)
b = desc.n_simple(1)
c = desc.theta_elem((0, 1))
left = multiply(desc, multiply(desc, a, b), c)
right = multiply(desc, a, multiply(desc, b, c))
print("associativity holds on the sample triple:", left == right)
