import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normforms.exactalg import QQ, RingMatrix, SimpleExt, SparsePoly
from normforms.exactalg.matrix import SingularMatrix
from normforms.csa import (NotDivisionAlgebra, QuatMatrix, QuaternionAlgebra, adjugate,
                           ndet, norm_form_zero, nrd, probe_quaternion_constant, quat_arith,
                           rho_of_delta, sharp3, split_embedding, verify_reduced_norm_transfer,
                           verify_split3_constant)
from normforms.csa.probe import quaternion_lhs, random_matrix, split3_lhs

H = QuaternionAlgebra(-1, -1)
SQRT2 = SimpleExt(QQ, [-2, 0, 1], "r")
CBRT2 = SimpleExt(QQ, [-2, 0, 0, 1], "t")
coords = st.lists(st.integers(-5, 5), min_size=4, max_size=4)


def test_defining_relations():
    one, i, j, k = H.basis
    assert i * j == k and j * i == -k
    assert i * i == -one and j * j == -one and k * k == -one
    assert (one + i) * (one - i) == H.scalar(QQ(2))


def test_reduced_norm_values():
    assert nrd(H([1, 1, 1, 1])) == 4
    assert nrd(H.scalar(QQ(7))) == 49
    assert H.nrd_form() == [1, 1, 1, 1]


@settings(max_examples=100)
@given(coords, coords)
def test_nrd_is_multiplicative_and_conjugation_gives_norm(p, q):
    p, q = H(p), H(q)
    assert nrd(p * q) == nrd(p) * nrd(q)
    assert p * p.conj() == H.scalar(nrd(p))
    if nrd(p):
        assert quat_arith(p, None, "inv") * p == H.one


def test_symbolic_nrd_multiplicativity():
    A = QuaternionAlgebra(QQ(-2), QQ(-5))
    names = [f"p{k}" for k in range(4)] + [f"q{k}" for k in range(4)]
    g = SparsePoly.gens(names)
    p, q = A.over(g[:4]), A.over(g[4:])
    assert ((p * q).nrd() - p.nrd() * q.nrd()).is_zero()


def test_inverse_of_norm_zero_element_fails():
    M2 = QuaternionAlgebra(1, 1)
    with pytest.raises(ZeroDivisionError):
        M2([1, 1, 0, 0]).inverse()


def test_division_certification():
    assert H.division == "definite"
    split = QuaternionAlgebra(1, 3)
    assert split.division is None and split.zero_found is not None
    with pytest.raises(NotDivisionAlgebra):
        ndet(QuatMatrix.identity(2, split))
    assert norm_form_zero(-1, -1, 5) is None
    assert QuaternionAlgebra(2, 5, declared_division=True).division == "declared"


def test_split_embedding_determinant_is_reduced_norm(rng):
    A = QuaternionAlgebra(1, 3)
    for _ in range(50):
        q = A.random(rng)
        m = split_embedding(q)
        assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == nrd(q)


def test_ndet_small_cases():
    assert ndet(QuatMatrix.identity(3, H)) == 1
    one, i, j, k = H.basis
    assert ndet(QuatMatrix.diag([one + i, j], H)) == 2
    qs = [H([1, 2, 0, 1]), H([0, 3, 1, 1]), H([2, 0, 0, 0])]
    assert ndet(QuatMatrix.diag(qs, H)) == 6 * 11 * 4
    assert ndet(QuatMatrix([[one, i], [one, i]], H)) == 0


def test_ndet_is_multiplicative(rng):
    for k in range(100):
        n = 2 + k % 2
        M, N = QuatMatrix.random(n, H, rng), QuatMatrix.random(n, H, rng)
        assert ndet(M * N) == ndet(M) * ndet(N)


def test_ndet_conjugation_invariance(rng):
    done = 0
    while done < 50:
        n = 2 + done % 2
        P = QuatMatrix.random(n, H, rng)
        if not ndet(P):
            continue
        M = QuatMatrix.random(n, H, rng)
        assert ndet(P.inverse() * M * P) == ndet(M)
        done += 1


def test_ndet_pivot_order_independence(rng):
    for k in range(40):
        M = QuatMatrix.random(2 + k % 3, H, rng, bound=2)
        assert ndet(M, "first") == ndet(M, "last")


def test_split_ndet_matches_commutative_determinant(rng):
    A = QuaternionAlgebra(1, 3)
    done = 0
    while done < 25:
        M = QuatMatrix.random(2, A, rng)
        try:
            value = ndet(M, require_division=False)
        except ZeroDivisionError:
            continue
        assert value == M.complex_image().det()
        done += 1


def test_rho_of_delta_examples():
    one, i, j, k = H.basis
    R = rho_of_delta(H, SQRT2, [i, j])
    assert R.rows == [[i, 2 * j], [j, i]]
    R = rho_of_delta(H, CBRT2, [i + j, H.zero, H.zero])
    assert R == QuatMatrix.identity(3, H) * (i + j)
    with pytest.raises(ValueError):
        rho_of_delta(H, SQRT2, [i])


def test_rho_is_additive_and_multiplicative(rng):
    for _ in range(25):
        d1 = [H.random(rng, 3) for _ in range(3)]
        d2 = [H.random(rng, 3) for _ in range(3)]
        summed = rho_of_delta(H, CBRT2, [a + b for a, b in zip(d1, d2)])
        assert summed == rho_of_delta(H, CBRT2, d1) + rho_of_delta(H, CBRT2, d2)
        # scalar coordinates commute, so rho restricted to K is a ring map
        s1 = [H.scalar(QQ(rng.randint(-3, 3))) for _ in range(3)]
        s2 = [H.scalar(QQ(rng.randint(-3, 3))) for _ in range(3)]
        prod = CBRT2([a.c[0] for a in s1]) * CBRT2([b.c[0] for b in s2])
        assert rho_of_delta(H, CBRT2, [H.scalar(c) for c in prod.coords]) == \
            rho_of_delta(H, CBRT2, s1) * rho_of_delta(H, CBRT2, s2)


def test_reduced_norm_transfer_worked_example():
    one, i, j, k = H.basis
    rep = verify_reduced_norm_transfer(H, SQRT2, [i, j])
    # Nrd(i + j r) = 1 + 2 and ndet([[i, 2j], [j, i]]) = 9 by hand
    assert rep.passed and rep.witness["lhs"] == 9


@pytest.mark.parametrize("K", [SQRT2, CBRT2], ids=["sqrt2", "cbrt2"])
def test_reduced_norm_transfer_random(K, rng):
    for _ in range(30):
        alphas = [H.random(rng, 2) for _ in range(K.degree)]
        assert verify_reduced_norm_transfer(H, K, alphas, rng.choice(["first", "last"])).passed


def test_reduced_norm_transfer_on_scalars():
    # Delta in K: both sides are N_K(Delta)^2
    delta = CBRT2([1, 1, 0])
    rep = verify_reduced_norm_transfer(H, CBRT2, [H.scalar(c) for c in delta.coords])
    assert rep.passed and rep.witness["lhs"] == CBRT2.norm(delta) ** 2


def test_quaternion_probe_scalar_specialization():
    # y = 1, x = t: the left side is (t^2 - c)^2 and the right side (t^2 - gamma)^2
    for t in (0, 1, 3):
        assert quaternion_lhs(H, 5, H.scalar(QQ(t)), H.one) == (t * t - 5) ** 2
    rep = probe_quaternion_constant(H, 5, [(H.scalar(QQ(3)), H.one)])
    assert "5" in rep.witness["consistent"]


@pytest.mark.parametrize("c", [2, 3, -7])
def test_quaternion_probe_resolves_to_c(c, rng):
    pairs = []
    while len(pairs) < 15:
        x, y = H.random(rng, 3), H.random(rng, 3)
        if nrd(y):
            pairs.append((x, y))
    rep = probe_quaternion_constant(H, c, pairs)
    assert rep.witness["consistent"] == [str(c)]
    assert rep.witness["resolved_equals_c"]


def test_probe_records_falsification():
    one, i, j, k = H.basis
    rep = probe_quaternion_constant(H, 2, [(i, j), (one + i, j + k)], candidates=[QQ(3)])
    assert not rep.passed and "3" in rep.witness["first_failures"]


def test_probe_rejects_singular_y():
    with pytest.raises(ValueError):
        probe_quaternion_constant(H, 2, [(H.one, H.zero)])


def test_sharp3_is_adjugate(rng):
    assert sharp3(RingMatrix.identity(3)) == RingMatrix.identity(3)
    for _ in range(100):
        x = random_matrix(rng)
        assert x * sharp3(x) == RingMatrix.identity(3) * x.det()
        assert sharp3(x) == adjugate(x)


def test_split_cubic_diagonal_specialization():
    # diagonal x, y: each diagonal entry contributes (x^2 - c y^2)
    x = RingMatrix([[QQ(1), 0, 0], [0, QQ(2), 0], [0, 0, QQ(3)]])
    y = RingMatrix([[QQ(1), 0, 0], [0, QQ(1), 0], [0, 0, QQ(2)]])
    expect = (1 - 7) * (4 - 7) * (9 - 28)
    assert split3_lhs(7, x, y) == expect
    consistent = verify_split3_constant(7, [(x, y)]).witness["consistent"]
    assert {"gamma": "7", "exponent": 2} in consistent


@pytest.mark.parametrize("c", [2, 5])
def test_split_cubic_constant_needs_squared_normalization(c, rng):
    pairs = [(random_matrix(rng), random_matrix(rng, invertible=True)) for _ in range(10)]
    rep = verify_split3_constant(c, pairs)
    assert rep.witness["consistent"] == [{"gamma": str(c), "exponent": 2}]
    assert not rep.witness["stated_normalization_matches"]


def test_split_probe_rejects_singular_y():
    with pytest.raises(SingularMatrix):
        verify_split3_constant(2, [(RingMatrix.identity(3), RingMatrix([[QQ(0)] * 3] * 3))])
