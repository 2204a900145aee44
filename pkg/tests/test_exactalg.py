from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normforms.exactalg import (GF, QQ, FieldMismatch, NotInvertible, RingMatrix, SimpleExt,
                                SparsePoly, blackbox_identity_test, companion, failure_bound,
                                field_from_descriptor, identity_test, is_irreducible,
                                quadratic_ring)
from normforms.exactalg.irreducible import norm_poly

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)
CUBE2 = SimpleExt(QQ, [-2, 0, 0, 1], "alpha")
F7 = GF(7)


def ring_axioms(a, b, c, zero, one):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert a - a == zero


@settings(max_examples=200)
@given(small_q, small_q, small_q)
def test_rational_ring_axioms(a, b, c):
    ring_axioms(QQ(a), QQ(b), QQ(c), QQ.zero, QQ.one)


@settings(max_examples=200)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_prime_field_axioms(a, b, c):
    a, b, c = F7(a), F7(b), F7(c)
    ring_axioms(a, b, c, F7.zero, F7.one)
    if a:
        assert a * a.inverse() == F7.one


@settings(max_examples=200)
@given(st.lists(small_q, min_size=3, max_size=3), st.lists(small_q, min_size=3, max_size=3),
       st.lists(small_q, min_size=3, max_size=3))
def test_extension_field_axioms(a, b, c):
    a, b, c = CUBE2(a), CUBE2(b), CUBE2(c)
    ring_axioms(a, b, c, CUBE2.zero, CUBE2.one)
    if a:
        assert a * a.inverse() == CUBE2.one
        assert CUBE2.norm(a * b) == CUBE2.norm(a) * CUBE2.norm(b)


def poly_strategy(names=("x", "y", "z"), max_terms=4):
    exps = st.tuples(*[st.integers(0, 2) for _ in names])
    return st.dictionaries(exps, st.integers(-5, 5), max_size=max_terms).map(
        lambda t: SparsePoly(names, {e: QQ(c) for e, c in t.items() if c}))


@settings(max_examples=200)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_polynomial_ring_axioms(p, q, r):
    zero = SparsePoly.zero(("x", "y", "z"))
    one = SparsePoly.const(1, ("x", "y", "z"))
    ring_axioms(p, q, r, zero, one)


@settings(max_examples=100)
@given(poly_strategy(), poly_strategy(), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_evaluation_is_a_homomorphism(p, q, point):
    assert (p * q).eval(point) == p.eval(point) * q.eval(point)
    assert (p + q).eval(point) == p.eval(point) + q.eval(point)


def test_field_descriptors_round_trip():
    for F in (QQ, F7, CUBE2, SimpleExt(CUBE2, [CUBE2([1, 0, 0]), 0, 1], "i")):
        assert field_from_descriptor(F.descriptor()) == F


def test_mixing_prime_fields_is_an_error():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)


def test_division_by_zero_raises():
    with pytest.raises(NotInvertible):
        CUBE2.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        F7(0).inverse()


def test_extension_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        SimpleExt(QQ, [-4, 0, 1])


def test_norm_and_minimal_polynomial_in_cube_root_field():
    a = CUBE2([1, 2, 3])
    assert CUBE2.norm(a) == 89
    assert CUBE2.minpoly_of(a) == [-89, -33, -3, 1]
    assert CUBE2.norm(CUBE2([1, 1, 0])) == 3


def test_quadratic_ring_conjugation():
    K = quadratic_ring(3)
    z = K.gen + 1
    assert K.conj(z) == 1 - K.gen
    assert K.norm(z) == -2
    assert list((z * K.conj(z)).coords) == [-2, 0]


def test_formatting():
    K = quadratic_ring(3)
    assert str(K.conj(K.gen + 1)) == "-s + 1"
    x, y = SparsePoly.gens(["x", "y"])
    assert str((x + y) ** 2) == "x^2 + 2*x*y + y^2"
    assert (x * Fraction(1, 2)).to_latex() == "\\frac{1}{2} x"


def random_matrix(rng, n, bound=5):
    return RingMatrix([[QQ(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)])


def test_determinant_methods_agree(rng):
    for _ in range(60):
        n = rng.randint(1, 6)
        M = random_matrix(rng, n)
        assert M.det_cofactor() == M.det_bareiss()


def test_determinant_is_multiplicative(rng):
    for _ in range(60):
        n = rng.randint(1, 5)
        A, B = random_matrix(rng, n), random_matrix(rng, n)
        assert (A * B).det() == A.det() * B.det()


def test_symbolic_determinant_methods_agree():
    names = [f"m{i}{j}" for i in range(1, 4) for j in range(1, 4)]
    g = SparsePoly.gens(names)
    M = RingMatrix([g[0:3], g[3:6], g[6:9]])
    assert M.det_cofactor() == M.det_bareiss()
    assert len(M.det_cofactor()) == 6


def test_companion_matrix_characteristic_polynomial():
    C = companion([-2, 0, 0, 1])
    assert (C * C * C) == RingMatrix.identity(3) * 2


def test_irreducibility():
    assert is_irreducible([-2, 0, 1])
    assert not is_irreducible([-4, 0, 1])
    assert is_irreducible([-1, -1, 0, 1])
    assert not is_irreducible([1, 0, 2, 0, 1])      # (x^2+1)^2
    assert not is_irreducible([4, 0, 0, 0, 1])      # x^4+4 = Sophie Germain
    assert is_irreducible([1, 0, 1], GF(3))
    assert not is_irreducible([1, 0, 1], GF(5))
    K = SimpleExt(QQ, [1, 0, 1], "i")
    assert is_irreducible([QQ(-2), 0, 0, 1], K)
    assert not is_irreducible([QQ(1), 0, 1], K)


def test_norm_poly_of_shifted_polynomial():
    K = SimpleExt(QQ, [1, 0, 1], "i")
    # N(x - i) = x^2 + 1
    assert norm_poly([-K.gen, K.one], K) == [1, 0, 1]


def test_exact_identity_witness_point():
    x, y = SparsePoly.gens(["x", "y"])
    rep = identity_test((x + y) ** 2, x * x + y * y)
    assert not rep.passed
    point = rep.witness["point"]
    assert ((x + y) ** 2 - x * x - y * y).eval([QQ(v) for v in point]) != 0


def test_exact_and_probabilistic_agree_on_random_pairs(rng):
    names = ("x", "y", "z")
    for k in range(100):
        p = SparsePoly(names, {(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)):
                               QQ(rng.randint(-3, 3) or 1) for _ in range(3)})
        q = p if k % 2 else p + SparsePoly(names, {(rng.randint(0, 2), 0, 1): QQ(1)})
        exact = identity_test(p, q, "exact").passed
        prob = identity_test(p, q, "probabilistic", seed=k).passed
        assert exact == prob == (k % 2 == 1)


def test_failure_bound_and_reported_bound():
    assert failure_bound(4, 101, 2) == Fraction(16, 101 ** 2)
    x, = SparsePoly.gens(["x"])
    rep = identity_test(x ** 3, x ** 3, "probabilistic", trials=3, seed=0)
    assert rep.passed and rep.mode == "probabilistic"


def test_blackbox_identity_test():
    rep = blackbox_identity_test(lambda v: (v["a"] + v["b"]) ** 2,
                                 lambda v: v["a"] ** 2 + 2 * v["a"] * v["b"] + v["b"] ** 2,
                                 ["a", "b"], 2, seed=3)
    assert rep.passed
    rep = blackbox_identity_test(lambda v: v["a"] * v["b"], lambda v: v["a"] + v["b"],
                                 ["a", "b"], 2, seed=3)
    assert not rep.passed


def test_probabilistic_is_reproducible():
    x, y = SparsePoly.gens(["x", "y"])
    a = identity_test(x * y, y * x + 1, "probabilistic", seed=11).to_json()
    b = identity_test(x * y, y * x + 1, "probabilistic", seed=11).to_json()
    assert a == b
