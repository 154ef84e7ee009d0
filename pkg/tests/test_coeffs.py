import random
from fractions import Fraction

from heckealg.coeffs import (CyclotomicValue, LaurentZ, TorusAlgebraElement,
                             cyclotomic_polynomial, evaluate_at_point,
                             z_bracket)


def rand_laurent(rng, nvars, nterms=3):
    return LaurentZ(nvars, {tuple(rng.randint(-2, 2) for _ in range(nvars)):
                            rng.randint(-4, 4) for _ in range(nterms)})


def rand_tae(rng, rank, nvars, nterms=3):
    return TorusAlgebraElement(
        rank, {tuple(rng.randint(-2, 2) for _ in range(rank)):
               rand_laurent(rng, nvars, 2) for _ in range(nterms)})


def test_laurent_basics():
    z = LaurentZ.var_power(1, 1, 1)
    zinv = LaurentZ.var_power(1, 1, -1)
    sq = (z - zinv) * (z - zinv)
    assert sq == LaurentZ(1, {(2,): 1, (0,): -2, (-2,): 1})
    assert z_bracket(1, 1, 0) == LaurentZ.zero(1)
    assert (z * zinv).is_one()


def test_theta_multiplication_inverse():
    one = LaurentZ.one(1)
    tx = TorusAlgebraElement.theta((2, -1), one)
    tnx = TorusAlgebraElement.theta((-2, 1), one)
    assert tx * tnx == TorusAlgebraElement.theta((0, 0), one)


def test_telescoping_identity():
    # theta_x (1 - theta_{-a}) * sum_{k<n} theta_{-k a} = theta_x - theta_{x - n a}
    one = LaurentZ.one(1)
    a = (1, -1)
    x = (3, 0)
    n = 4
    lhs = TorusAlgebraElement.theta(x, one) - TorusAlgebraElement.theta(
        (x[0] - 1, x[1] + 1), one)
    geom = TorusAlgebraElement(2, {(-k * a[0], -k * a[1]): one
                                   for k in range(n)})
    prod = lhs * geom
    expect = TorusAlgebraElement.theta(x, one) - TorusAlgebraElement.theta(
        (x[0] - n * a[0], x[1] - n * a[1]), one)
    assert prod == expect


def test_ring_axioms_fuzz():
    rng = random.Random(7)
    for _ in range(40):
        a = rand_laurent(rng, 2)
        b = rand_laurent(rng, 2)
        c = rand_laurent(rng, 2)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
    for _ in range(25):
        a = rand_tae(rng, 2, 1)
        b = rand_tae(rng, 2, 1)
        c = rand_tae(rng, 2, 1)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_act_is_ring_automorphism():
    rng = random.Random(3)
    swap = ((0, 1), (1, 0))
    for _ in range(20):
        a = rand_tae(rng, 2, 1)
        b = rand_tae(rng, 2, 1)
        assert (a * b).act_matrix(swap) == a.act_matrix(swap) * b.act_matrix(swap)
        assert (a + b).act_matrix(swap) == a.act_matrix(swap) + b.act_matrix(swap)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]


def test_evaluate_examples():
    one = LaurentZ.one(1)
    zero = TorusAlgebraElement.theta((0,), one)
    assert evaluate_at_point(zero, (5,), 7, (Fraction(1),)) == 1

    # order-2 evaluation: <x, t> = N/2 mod N gives -1
    tx = TorusAlgebraElement.theta((1,), one)
    val = evaluate_at_point(tx, (1,), 2, (Fraction(1),))
    assert val == CyclotomicValue(2, {0: Fraction(-1)})

    # (theta_x + theta_{-x}) at an order-4 point with pairing 1: i + (-i) = 0
    e = TorusAlgebraElement.theta((1,), one) + TorusAlgebraElement.theta((-1,), one)
    assert evaluate_at_point(e, (1,), 4, (Fraction(1),)).is_zero()


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(11)
    z = (Fraction(3, 2),)
    for _ in range(15):
        a = rand_tae(rng, 2, 1)
        b = rand_tae(rng, 2, 1)
        ea = evaluate_at_point(a, (1, 2), 6, z)
        eb = evaluate_at_point(b, (1, 2), 6, z)
        eab = evaluate_at_point(a * b, (1, 2), 6, z)
        assert eab == ea * eb
        assert evaluate_at_point(a + b, (1, 2), 6, z) == ea + eb
