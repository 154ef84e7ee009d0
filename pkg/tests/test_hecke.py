import random
from fractions import Fraction

import pytest

from heckealg.checks import (check_associativity, check_bernstein, check_braid,
                             check_center, check_degeneration, check_im,
                             check_quadratic, graded_test_descriptors,
                             random_element, standard_descriptors)
from heckealg.coeffs import LaurentZ, TorusAlgebraElement
from heckealg.hecke import (AffineDescriptor, HeckeError, act,
                            affine_to_graded, bernstein_divide,
                            graded_from_datum, graded_multiply, im_involution,
                            is_central, multiply, poly_divide_linear,
                            quotient_z1, serialize_element,
                            specialize_element, spread_invariant, symmetrize)
from heckealg.root_data import build_classical
from heckealg.weyl import Cocycle, ExtendedGroup

DESCS = standard_descriptors()


def one(desc):
    return desc.scalar_one()


# ---------------------------------------------------------------------------
# bernstein_divide
# ---------------------------------------------------------------------------

def test_divide_zero_pairing():
    a1 = build_classical("A", 1)
    alpha = a1.root((1, -1))
    d = bernstein_divide((1, 1), alpha, False, LaurentZ.one(1))
    assert not d


def test_divide_gl2_examples():
    a1 = build_classical("A", 1)
    alpha = a1.root((1, -1))
    lone = LaurentZ.one(1)
    d = bernstein_divide((1, 0), alpha, False, lone)
    assert d == TorusAlgebraElement.theta((1, 0), lone)
    d2 = bernstein_divide((2, 0), alpha, False, lone)
    assert d2 == TorusAlgebraElement(2, {(2, 0): lone, (1, 1): lone})


def test_divide_multiplies_back():
    rng = random.Random(9)
    for name in ("A2", "B2", "BC2"):
        desc = DESCS[name]
        rd = desc.rd
        lone = desc.scalar_one()
        for info in desc.simple_info:
            for _ in range(25):
                x = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
                pairing = sum(a * b for a, b in zip(x, info.root.coroot))
                if info.halvable and pairing % 2:
                    continue
                d = bernstein_divide(x, info.root, info.halvable, lone)
                mult = 2 if info.halvable else 1
                denom = TorusAlgebraElement.theta((0,) * rd.rank, lone) - \
                    TorusAlgebraElement.theta(
                        tuple(-mult * c for c in info.root.vector), lone)
                sx = tuple(x[i] - pairing * info.root.vector[i]
                           for i in range(rd.rank))
                expect = TorusAlgebraElement.theta(x, lone) - \
                    TorusAlgebraElement.theta(sx, lone)
                assert d * denom == expect


def test_divide_parity_violation():
    bc1 = DESCS["BC1"]
    info = bc1.simple_info[0]
    with pytest.raises(HeckeError):
        # odd pairing: <e1, 2 e1> = 2 is even, so force oddness by using
        # the doubled divide against a vector with odd pairing
        bernstein_divide((1,), build_classical("C", 1).root((2,)), True,
                         bc1.scalar_one())


# ---------------------------------------------------------------------------
# multiply: the three defining relations and worked examples
# ---------------------------------------------------------------------------

def test_quadratic_relation_shape():
    desc = DESCS["A1"]
    ns = desc.n_simple(0)
    sq = multiply(desc, ns, ns)
    expect = desc.unit() + ns.scale(desc.zbracket(1, 2))
    assert sq == expect


def test_theta_times_theta():
    desc = DESCS["B2"]
    assert multiply(desc, desc.theta_elem((1, 0)), desc.theta_elem((-1, 2))) \
        == desc.theta_elem((0, 2))


def test_unit_is_identity():
    rng = random.Random(21)
    for name, desc in DESCS.items():
        for _ in range(5):
            a = random_element(desc, rng)
            assert multiply(desc, desc.unit(), a) == a, name
            assert multiply(desc, a, desc.unit()) == a, name


def test_ns_theta_example():
    # GL2: N_s theta_{e1} = theta_{e2} N_s + (z^l - z^-l) theta_{e1}
    a1 = build_classical("A", 1)
    w = ExtendedGroup(a1)
    desc = AffineDescriptor(a1, w, spread_invariant(a1, w, {(1, -1): 1}), {},
                            Cocycle.trivial(("e",)))
    lhs = multiply(desc, desc.n_simple(0), desc.theta_elem((1, 0)))
    bracket = desc.zbracket(1, 1)
    rhs = multiply(desc, desc.theta_elem((0, 1)), desc.n_simple(0)) + \
        desc.theta_elem((1, 0)).scale(bracket)
    assert lhs == rhs


def test_relation_suites_small():
    rng = random.Random(0)
    for name, desc in DESCS.items():
        assert check_quadratic(desc), name
        assert check_braid(desc), name
        assert check_bernstein(desc, random.Random(1), samples=8), name
        assert check_associativity(desc, rng, 12), name


def test_descriptor_parameter_validation():
    b2 = build_classical("B", 2)
    w = ExtendedGroup(b2)
    lam = spread_invariant(b2, w, {(1, -1): 1, (0, 1): 2})
    lam_star = spread_invariant(b2, w, {(0, 1): 1})
    # missing lambda on an orbit
    with pytest.raises(HeckeError):
        AffineDescriptor(b2, w, spread_invariant(b2, w, {(1, -1): 1}),
                         lam_star, Cocycle.trivial(("e",)))
    # lambda* on a non-halvable root
    with pytest.raises(HeckeError):
        AffineDescriptor(b2, w, lam,
                         spread_invariant(b2, w, {(0, 1): 1, (1, -1): 1}),
                         Cocycle.trivial(("e",)))
    # non-invariant lambda (distinct values inside one orbit)
    bad = dict(lam)
    bad[(0, 1)] = 7
    with pytest.raises(HeckeError):
        AffineDescriptor(b2, w, bad, lam_star, Cocycle.trivial(("e",)))
    # negative parameter
    with pytest.raises(HeckeError):
        AffineDescriptor(b2, w, spread_invariant(
            b2, w, {(1, -1): -1, (0, 1): 2}), lam_star,
            Cocycle.trivial(("e",)))
    # specialization needs positive rationals
    good = AffineDescriptor(b2, w, lam, lam_star, Cocycle.trivial(("e",)))
    with pytest.raises(HeckeError):
        good.specialized((Fraction(-2),))


def test_descriptor_mismatch_rejected():
    from heckealg.weyl import ExtendedWeylElement, WeylElement
    desc = DESCS["B2"]
    # a lattice automorphism that does not permute the B2 roots
    shear = WeylElement(((1, 1), (0, 1)))
    bogus = desc.element({ExtendedWeylElement(shear, "e"):
                          TorusAlgebraElement.theta((0, 0), one(desc))})
    with pytest.raises(HeckeError):
        multiply(desc, bogus, desc.unit())
    # symbolic element fed to a specialized descriptor
    spec = DESCS["A1"].specialized((Fraction(2),))
    with pytest.raises(HeckeError):
        multiply(spec, DESCS["A1"].unit(), DESCS["A1"].unit())


def test_act_examples():
    desc = DESCS["A1"]
    e = TorusAlgebraElement.theta((1, 0), one(desc))
    g = desc.wext.elements()[1] if desc.wext.elements()[0] == desc.wext.identity \
        else desc.wext.elements()[0]
    # the nontrivial element of W(A1) swaps the coordinates
    nontriv = [w for w in desc.wext.elements() if w != desc.wext.identity][0]
    assert act(desc, nontriv, e) == TorusAlgebraElement.theta((0, 1), one(desc))
    assert act(desc, desc.wext.identity, e) == e

    b2 = DESCS["B2"]
    wg = b2.wext.weyl
    longest = max(wg.enumerate(), key=wg.length)
    from heckealg.weyl import ExtendedWeylElement
    g = ExtendedWeylElement(longest, "e")
    e = TorusAlgebraElement.theta((1, 2), one(b2))
    assert act(b2, g, e) == TorusAlgebraElement.theta((-1, -2), one(b2))


def test_act_composition_automorphism():
    desc = DESCS["B2"]
    rng = random.Random(4)
    els = desc.wext.elements()
    for _ in range(15):
        g, h = rng.choice(els), rng.choice(els)
        e = TorusAlgebraElement(2, {(rng.randint(-2, 2), rng.randint(-2, 2)):
                                    one(desc)})
        f = TorusAlgebraElement(2, {(rng.randint(-2, 2), rng.randint(-2, 2)):
                                    one(desc)})
        gh = desc.wext.mult(g, h)
        assert act(desc, gh, e) == act(desc, g, act(desc, h, e))
        assert act(desc, g, e * f) == act(desc, g, e) * act(desc, g, f)


# ---------------------------------------------------------------------------
# specialization and the crossed product
# ---------------------------------------------------------------------------

def test_specialize_examples():
    desc = DESCS["A1"]   # lambda = 2
    spec = desc.specialized((Fraction(2),))
    ns = spec.n_simple(0)
    sq = multiply(spec, ns, ns)
    # z^2 - z^-2 at z=2: 4 - 1/4 = 15/4
    expect = spec.unit() + ns.scale(Fraction(15, 4))
    assert sq == expect

    q1 = quotient_z1(desc)
    ns1 = q1.n_simple(0)
    assert multiply(q1, ns1, ns1) == q1.unit()
    # N_s theta_x = theta_{sx} N_s exactly at z = 1
    lhs = multiply(q1, ns1, q1.theta_elem((1, 0)))
    rhs = multiply(q1, q1.theta_elem((0, 1)), ns1)
    assert lhs == rhs


def test_specialize_lambda1_z2():
    # lambda = 1, z = 2: N_s^2 = (3/2) N_s + N_e
    a1 = build_classical("A", 1)
    w = ExtendedGroup(a1)
    desc = AffineDescriptor(a1, w, spread_invariant(a1, w, {(1, -1): 1}), {},
                            Cocycle.trivial(("e",)))
    spec = desc.specialized((Fraction(2),))
    ns = spec.n_simple(0)
    assert multiply(spec, ns, ns) == spec.unit() + ns.scale(Fraction(3, 2))


def test_degenerate_datum_with_rgroup():
    # empty root set: O(T) (x) ZZ[z^+-] x| ZZ[R, cocycle]
    from heckealg.root_data import empty_datum
    from heckealg.weyl import RGroup, identity_matrix
    rd = empty_datum(1)
    flip = ((-1,),)
    rg = RGroup(("e", "g"), {"e": identity_matrix(1), "g": flip},
                {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g",
                 ("g", "g"): "e"})
    wext = ExtendedGroup(rd, rg)
    coc = Cocycle(("e", "g"), {("e", "e"): 1, ("e", "g"): 1, ("g", "e"): 1,
                               ("g", "g"): -1})
    desc = AffineDescriptor(rd, wext, {}, {}, coc)
    ng = desc.n_gamma("g")
    assert multiply(desc, ng, ng) == desc.unit().scale(-1)
    # N_g theta_x = theta_{-x} N_g
    lhs = multiply(desc, ng, desc.theta_elem((3,)))
    rhs = multiply(desc, desc.theta_elem((-3,)), ng)
    assert lhs == rhs
    assert check_degeneration(desc)


def test_specialize_element_map():
    desc = DESCS["A1"]
    spec = desc.specialized((Fraction(3),))
    e = desc.unit().scale(desc.zbracket(1, 1))
    se = specialize_element(spec, e)
    assert se == spec.unit().scale(Fraction(8, 3))


def test_degeneration_all_zoo():
    for name, desc in DESCS.items():
        assert check_degeneration(desc), name


# ---------------------------------------------------------------------------
# centre
# ---------------------------------------------------------------------------

def test_symmetrize_gl2():
    a1 = build_classical("A", 1)
    w = ExtendedGroup(a1)
    desc = AffineDescriptor(a1, w, spread_invariant(a1, w, {(1, -1): 1}), {},
                            Cocycle.trivial(("e",)))
    s = symmetrize(desc, (1, 0))
    coeff = s.terms[desc.wext.identity]
    assert coeff == TorusAlgebraElement(2, {(1, 0): one(desc),
                                            (0, 1): one(desc)})
    assert is_central(desc, s)
    assert not is_central(desc, desc.theta_elem((1, 0)))
    # scalars z_1 are central
    assert is_central(desc, desc.unit().scale(desc.zmonomial((1,))))


def test_center_rank_le3():
    for name, desc in DESCS.items():
        if desc.rd.rank <= 3:
            assert check_center(desc), name


# ---------------------------------------------------------------------------
# graded algebra
# ---------------------------------------------------------------------------

def test_poly_divide_linear_cases():
    lone = LaurentZ.one(1)
    # (x1 - x2 sym poly) / (x1 - x2)
    p = TorusAlgebraElement(2, {(2, 0): lone, (0, 2): -1 * lone})
    q = poly_divide_linear(p, (1, -1))
    assert q == TorusAlgebraElement(2, {(1, 0): lone, (0, 1): lone})
    # division by 2 e_1 with integral quotient
    p2 = TorusAlgebraElement(1, {(3,): LaurentZ.const(1, 4)})
    q2 = poly_divide_linear(p2, (2,))
    assert q2 == TorusAlgebraElement(1, {(2,): LaurentZ.const(1, 2)})
    with pytest.raises(ArithmeticError):
        poly_divide_linear(TorusAlgebraElement(2, {(0, 1): lone}), (1, 0))


def test_graded_linear_case():
    # (xi - s xi)/alpha = xi(alpha^vee) for linear xi
    b2 = build_classical("B", 2)
    gd = graded_from_datum(b2, {r.vector: 1 for r in b2.nondivisible_roots})
    alpha = b2.simple_roots[1]           # short root e2, coroot 2 e2
    xi = TorusAlgebraElement(2, {(1, 0): LaurentZ.one(1)})  # x1
    from heckealg.hecke import act_poly
    sxi = act_poly(gd.simple_info[1].matrix, xi, gd.scalar_one())
    diff = xi - sxi
    if diff:
        q = poly_divide_linear(diff, alpha.vector)
        const = q.terms.get((0, 0))
        pairing = 0  # <x1, (2 e2)> = 0
        assert const is None and pairing == 0
    xi2 = TorusAlgebraElement(2, {(0, 1): LaurentZ.one(1)})  # x2
    sxi2 = act_poly(gd.simple_info[1].matrix, xi2, gd.scalar_one())
    q = poly_divide_linear(xi2 - sxi2, alpha.vector)
    assert q == TorusAlgebraElement(2, {(0, 0): LaurentZ.const(1, 2)})


def test_graded_group_relation():
    for name, gd in graded_test_descriptors(DESCS).items():
        for i in range(len(gd.simple_info)):
            ns = gd.n_simple(i)
            assert graded_multiply(gd, ns, ns) == gd.unit(), name


def test_graded_braid_example():
    # N_s xi = -xi N_s + 2 c(alpha) r_j for xi = alpha
    desc = DESCS["B2"]
    gd = affine_to_graded(desc, (0, 0), 1)
    i = 1
    info = gd.simple_info[i]
    ns = gd.n_simple(i)
    xi = gd.xi(info.root.vector)
    prod = graded_multiply(gd, ns, xi)
    expect = graded_multiply(gd, gd.xi(tuple(-c for c in info.root.vector)), ns)
    rterm = gd.unit()
    rcoeff = LaurentZ.var_power(gd.d, info.rvar, 1) * (2 * info.k)
    from heckealg.hecke import GradedElement
    expect = expect + GradedElement(
        {gd.identity_key: TorusAlgebraElement(
            gd.rd.rank, {(0,) * gd.rd.rank: rcoeff})})
    assert prod == expect


def test_im_involution_examples():
    desc = DESCS["B2"]
    gd = affine_to_graded(desc, (0, 0), 1)
    ns = gd.n_simple(0)
    assert im_involution(gd, ns) == GradedScale(ns, -1)
    xi = gd.xi((1, 0))
    assert im_involution(gd, xi) == GradedScale(xi, -1)
    # r_j is fixed
    from heckealg.hecke import GradedElement
    r = GradedElement({gd.identity_key: TorusAlgebraElement(
        2, {(0, 0): LaurentZ.var_power(1, 1, 1)})})
    assert im_involution(gd, r) == r


def GradedScale(elem, c):
    from heckealg.hecke import GradedElement
    return GradedElement({k: TorusAlgebraElement(
        v.rank, {m: val * c for m, val in v.terms.items()})
        for k, v in elem.terms.items()})


def test_im_trivial_on_diagram_part():
    desc = DESCS["A1xA1-twisted"]
    gd = affine_to_graded(desc, (0, 0, 0, 0), 1)
    labels = [l for l in gd.diagram_matrices if l != "e"]
    assert labels, "expected a nontrivial diagram part"
    ng = gd.n_label(labels[0])
    assert im_involution(gd, ng) == ng


def test_im_suite():
    for name, gd in graded_test_descriptors(DESCS).items():
        assert check_im(gd, random.Random(0), 15), name


def test_graded_associativity():
    from heckealg.checks import check_graded_associativity
    graded = graded_test_descriptors(DESCS)
    for name in ("B2@(1,1)/2", "BC2@(1,1)/2", "A1xA1-twisted@1", "BC1@(1)/2"):
        assert check_graded_associativity(graded[name], random.Random(3), 8), \
            name


def test_graded_descriptor_with_diagram_stabilizer():
    # identity-point reduction of the swapped A1 x A1 algebra keeps the
    # diagram group; its twisted relation N_g^2 = -1 survives grading
    desc = DESCS["A1xA1-twisted"]
    gd = affine_to_graded(desc, (0, 0, 0, 0), 1)
    labels = [l for l in gd.diagram_matrices if l != "e"]
    assert len(labels) == 1
    ng = gd.n_label(labels[0])
    sq = graded_multiply(gd, ng, ng)
    from heckealg.hecke import GradedElement
    minus_unit = GradedElement({gd.identity_key: TorusAlgebraElement(
        gd.rd.rank, {(0,) * gd.rd.rank: LaurentZ.const(gd.d, -1)})})
    assert sq == minus_unit
    # the label conjugates the two A1 factors into each other
    from heckealg.weyl import WeylElement
    i0 = gd.simple_info[0]
    conj = gd.conj_by_label(labels[0], WeylElement(i0.matrix))
    assert conj.matrix != i0.matrix
    assert any(conj.matrix == info.matrix for info in gd.simple_info)


def test_affine_to_graded_parameters():
    # lambda = 5, lambda* = 1 on a halvable root: k = 6 at alpha(t) = 1
    # and k = 4 at alpha(t) = -1; simply laced lambda = 1 gives k = 2.
    b1 = build_classical("B", 1)
    w = ExtendedGroup(b1)
    desc = AffineDescriptor(b1, w, spread_invariant(b1, w, {(1,): 5}),
                            spread_invariant(b1, w, {(1,): 1}),
                            Cocycle.trivial(("e",)))
    gd = affine_to_graded(desc, (0,), 1)
    assert gd.k[(1,)] == 6
    gd = affine_to_graded(desc, (1,), 2)
    assert gd.k[(1,)] == 4

    a1 = DESCS["A2"]
    gd = affine_to_graded(a1, (0, 0, 0), 1)
    assert all(v == 2 for v in gd.k.values())


def test_serialization_deterministic():
    desc = DESCS["B2"]
    rng1 = random.Random(13)
    e1 = random_element(desc, rng1, nterms=4)
    rng2 = random.Random(13)
    e2 = random_element(desc, rng2, nterms=4)
    assert serialize_element(desc, e1) == serialize_element(desc, e2)
    assert serialize_element(desc, desc.zero()) == "0"
    s = serialize_element(desc, multiply(desc, desc.n_simple(1),
                                         desc.n_simple(1)))
    assert "N[|e]" in s and "N[2|e]" in s
