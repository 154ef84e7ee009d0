"""Reduction to graded Hecke algebras at finite-order points.

At a point t of the unitary torus, the affine algebra localizes to a
graded algebra on the subsystem of roots fixing t, with parameters
k(alpha) = 2 lambda, or lambda +- lambda* on halvable roots according to
the sign alpha(t).  We exhibit the Sp2-dual block, the graded braid
relation, and the Iwahori-Matsumoto involution.
"""

from heckealg import (AffineDescriptor, Cocycle, ExtendedGroup,
                      affine_to_graded, build_classical, graded_multiply,
                      im_involution, spread_invariant)

# B1 block with Jordan data a = 5, a' = 3: lambda = 5, lambda* = 1
b1 = build_classical("B", 1)
w = ExtendedGroup(b1)
desc = AffineDescriptor(b1, w,
                        spread_invariant(b1, w, {(1,): 5}),
                        spread_invariant(b1, w, {(1,): 1}),
                        Cocycle.trivial(("e",)))

for exps, order, tag in (((0,), 1, "t = 1   (alpha(t) = +1)"),
                         ((1,), 2, "t = -1  (alpha(t) = -1)")):
    gd = affine_to_graded(desc, exps, order)
    print("%s:  k(alpha) = %d" % (tag, gd.k[(1,)]))
print("   (the graded parameters are a + 1 = 6 and a' + 1 = 4)")
print()

# graded braid relation: N_s xi = (s xi) N_s + k r (xi - s xi)/alpha
gd = affine_to_graded(desc, (0,), 1)
ns = gd.n_simple(0)
xi = gd.xi((1,))
prod = graded_multiply(gd, ns, xi)
print("N_s * x =", prod)
print()

# IM involution: N_s -> -N_s, xi -> -xi, r -> r; it is an involution
a = graded_multiply(gd, ns, xi)
ima = im_involution(gd, a)
print("IM(N_s x)      =", ima)
print("IM(IM(N_s x))  == N_s x:", im_involution(gd, ima) == a)

# and an algebra automorphism
b = gd.xi((1,))
lhs = im_involution(gd, graded_multiply(gd, a, b))
rhs = graded_multiply(gd, im_involution(gd, a), im_involution(gd, b))
print("IM(ab) == IM(a) IM(b):", lhs == rhs)
