import pytest

from normforms.exactalg import QQ, RingMatrix, SimpleExt, SparsePoly, identity_test
from normforms.exactalg.identity import blackbox_identity_test
from normforms.extfields import (COPRIME, GALOIS, GUARANTEED, P_POWER, UNKNOWN,
                                 NotLinearlyDisjoint, QuadraticContext, absolute_minpoly,
                                 absolute_norm, compositum, kummer_extension, kummer_vector,
                                 norm, norm_form, norm_tower_factor, regular_rep, tower_plan,
                                 transfer_form, trinomial_vector, verify_kummer_norm_identity,
                                 verify_transitivity_instance, verify_trinomial_norm_identity)
from normforms.extfields.towers import flatten
from normforms.extfields.transitivity import random_instance
from normforms.forms import Form, diagonal_form

CUBE2 = SimpleExt(QQ, [-2, 0, 0, 1], "alpha")
GAUSS = SimpleExt(QQ, [1, 0, 1], "i")
SQRT2 = SimpleExt(QQ, [-2, 0, 1], "r2")


def resultant(f, g):
    """Sylvester determinant; equals prod g(roots of f) for monic ``f``."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for k in range(n):
        rows.append([0] * k + list(reversed(f)) + [0] * (size - m - 1 - k))
    for k in range(m):
        rows.append([0] * k + list(reversed(g)) + [0] * (size - n - 1 - k))
    return RingMatrix([[QQ(x) for x in r] for r in rows]).det()


def test_regular_rep_of_generator_is_companion():
    assert regular_rep(CUBE2, CUBE2.gen) == RingMatrix([[0, 0, 2], [1, 0, 0], [0, 1, 0]])
    assert regular_rep(CUBE2, CUBE2.one) == RingMatrix.identity(3)


def test_regular_rep_is_a_ring_homomorphism(rng):
    for _ in range(30):
        a, b = CUBE2.random_element(rng), CUBE2.random_element(rng)
        assert regular_rep(CUBE2, a + b) == regular_rep(CUBE2, a) + regular_rep(CUBE2, b)
        assert regular_rep(CUBE2, a * b) == regular_rep(CUBE2, a) * regular_rep(CUBE2, b)


def test_norm_values():
    assert norm(CUBE2, CUBE2.gen) == 2
    assert norm(CUBE2, CUBE2([QQ.parse("3/2"), 0, 0])) == QQ.parse("27/8")
    assert norm(CUBE2, CUBE2([1, 1, 0])) == 3


def test_norm_matches_resultant(rng):
    for f in ([-2, 0, 0, 1], [-1, -1, 0, 1], [3, 1, 0, 0, 1]):
        E = SimpleExt(QQ, f)
        for _ in range(15):
            a = E.random_element(rng)
            g = list(a.coords)
            while len(g) > 1 and not g[-1]:
                g.pop()
            assert norm(E, a) == resultant(f, g)


def test_norm_form_examples():
    phi = norm_form(CUBE2)
    z1, z2, z3 = SparsePoly.gens(["z1", "z2", "z3"])
    assert phi.poly == z1 ** 3 + 2 * z2 ** 3 + 4 * z3 ** 3 - 6 * z1 * z2 * z3
    assert phi.evaluate([1, 0, 0]) == 1
    sym = norm_form(kummer_extension(2, "e"))
    z1, z2, e = SparsePoly.gens(["z1", "z2", "e"])
    assert sym.poly == z1 ** 2 - e * z2 ** 2


@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("trinomial", [False, True])
def test_norm_is_multiplicative_symbolically(d, trinomial):
    E = kummer_extension(d, "c", "b" if trinomial else None)
    phi = norm_form(E, prefix="x")
    names = [f"x{i}" for i in range(1, d + 1)]
    xs = SparsePoly.gens(names)
    ys = SparsePoly.gens([f"y{i}" for i in range(1, d + 1)])
    prod = E.element(xs) * E.element(ys)
    pv = dict(zip(phi.variables, prod.coords))
    xv, yv = dict(zip(phi.variables, xs)), dict(zip(phi.variables, ys))
    lhs = phi.poly.substitute(pv)
    rhs = phi.poly.substitute(xv) * phi.poly.substitute(yv)
    mode = "exact" if d <= 3 else "probabilistic"
    assert identity_test(lhs, rhs, mode, seed=d).passed


def test_tower_norm_transitivity(rng):
    """Stepwise norm through Q(sqrt2, sqrt3) equals det of the flat 4x4 representation."""
    L = SimpleExt(SQRT2, [SQRT2([-3, 0]), 0, 1], "r3")
    basis = [L([SQRT2([int(i == 0), int(i == 1)]) if k == j else SQRT2.zero for k in range(2)])
             for j in range(2) for i in range(2)]
    for _ in range(50):
        a = L.random_element(rng)
        cols = [flatten(L, a * e) for e in basis]
        flat = RingMatrix([[cols[j][i] for j in range(4)] for i in range(4)])
        assert absolute_norm(L, a) == flat.det()


def test_transfer_of_square_through_quadratic_extension():
    E = kummer_extension(2, "e")
    phi0 = diagonal_form([1], 2)
    T = transfer_form(E, phi0)
    u, w, e = SparsePoly.gens(["u1", "w1", "e"])
    assert T.poly == (u * u - e * w * w) ** 2
    assert T.degree == 4 and T.dim == 2


def test_transfer_of_linear_form_is_the_norm_form():
    x, = SparsePoly.gens(["x"])
    T = transfer_form(CUBE2, Form(x, 1, ("x",)))
    assert T.poly == norm_form(CUBE2, ["u1", "v1", "w1"]).poly


def test_transfer_with_zero_extension_blocks():
    phi0 = diagonal_form([1, 3, 5], 3)
    T = transfer_form(SQRT2, phi0)
    u = SparsePoly.gens(["u1", "u2", "u3"])
    point = {name: (SparsePoly.var(name, (name,)) if name.startswith("u") else 0)
             for name in T.variables}
    assert T.poly.substitute(point) == (phi0.evaluate(u)) ** 2


def test_kummer_vector_small_cases():
    ctx = QuadraticContext.symbolic(3, None)
    u1, v1, e = SparsePoly.gens(["u1", "v1", "e"])
    assert ctx.a_list()[0] == (u1 * u1 - e * v1 * v1)
    vec2 = kummer_vector(2)
    c, e = SparsePoly.gens(["c", "e"])
    u1, u2, v1, v2 = SparsePoly.gens(["u1", "u2", "v1", "v2"])
    n1 = u1 * u1 - e * v1 * v1
    n2 = u2 * u2 - e * v2 * v2
    assert vec2[0] == n1 + c * n2
    assert vec2[1] == 2 * (u1 * u2 - e * v1 * v2)


def test_kummer_vector_without_v_squares_the_element():
    d = 3
    ctx = QuadraticContext.symbolic(d, None)
    zero = {f"v{i}": 0 for i in range(1, d + 1)}
    vec = [x.substitute(zero) for x in ctx.kummer_vector()]
    E = kummer_extension(d, "c")
    us = [SparsePoly.var(f"u{i}", (f"u{i}",)) for i in range(1, d + 1)]
    square = E.element(us) * E.element(us)
    for got, want in zip(vec, square.coords):
        assert identity_test(got, want).passed


def test_vector_entries_are_sigma_invariant():
    for d in range(2, 6):
        assert len(kummer_vector(d)) == d
        assert len(trinomial_vector(d)) == d


def test_trinomial_vector_reduces_to_kummer_vector():
    for d in (2, 3):
        ctx = QuadraticContext.symbolic(d, 0)
        assert ctx.trinomial_vector() == ctx.kummer_vector()


@pytest.mark.parametrize("d", [2, 3])
def test_kummer_identity_exact(d):
    rep = verify_kummer_norm_identity(d)
    assert rep.passed and rep.mode == "exact"


@pytest.mark.parametrize("d", [4, 5])
def test_kummer_identity_probabilistic(d):
    rep = verify_kummer_norm_identity(d)
    assert rep.passed and rep.mode == "probabilistic"
    assert float(rep.witness["failure_bound_log2"]) < -40


def test_identity_reports_are_deterministic():
    a = verify_kummer_norm_identity(4, seed=5).to_json()
    assert a == verify_kummer_norm_identity(4, seed=5).to_json()


@pytest.mark.parametrize("d", [2, 3, 4])
def test_trinomial_identity_with_zero_b_matches_pure_case(d):
    pure = verify_kummer_norm_identity(d, seed=1)
    zero = verify_trinomial_norm_identity(d, b=0, seed=1)
    assert pure.passed and zero.passed
    key = "lhs_digest" if d <= 3 else "evaluations"
    assert pure.witness[key] == zero.witness[key]


def test_trinomial_identity_symbolic_b():
    assert verify_trinomial_norm_identity(3).passed
    assert verify_trinomial_norm_identity(4).passed


def test_split_quadratic_specialization(rng):
    """With e = t^2 the left side splits as phi(u + t v) * phi(u - t v)."""
    d, t = 3, 3
    phi = norm_form(SimpleExt(QQ, [-2, 0, 0, 1]))
    for _ in range(10):
        values = {"c": QQ(2), "e": QQ(t * t)}
        u = [QQ(rng.randint(-4, 4)) for _ in range(d)]
        v = [QQ(rng.randint(-4, 4)) for _ in range(d)]
        values.update({f"u{i + 1}": u[i] for i in range(d)})
        values.update({f"v{i + 1}": v[i] for i in range(d)})
        lhs = QuadraticContext(d, values).lhs()
        plus = phi.evaluate([a + t * b for a, b in zip(u, v)])
        minus = phi.evaluate([a - t * b for a, b in zip(u, v)])
        assert lhs == plus * minus


def test_transitivity_worked_instance():
    rep = verify_transitivity_instance([-2, 0, 0, 1], GAUSS, [[0, 1], [1, 0], [0, 0]])
    assert rep.passed
    # N(i + alpha) over Q(i) is alpha^2 + 1; both sides equal N_{Q(i)/Q}(2 - i) = 5
    assert rep.witness["a"] == [1, 0, 1]
    assert rep.witness["lhs"] == rep.witness["rhs"] == 5


def test_transitivity_of_one():
    rep = verify_transitivity_instance([-2, 0, 0, 1], GAUSS, [[1, 0], [0, 0], [0, 0]])
    assert rep.passed and rep.witness["a"] == [1, 0, 0] and rep.witness["lhs"] == 1


def test_transitivity_rational_input():
    rep = verify_transitivity_instance([-2, 0, 0, 1], GAUSS, [[3, 0], [0, 0], [0, 0]])
    assert rep.passed and rep.witness["lhs"] == 3 ** 6


def test_transitivity_random(rng):
    for f, K in (([-2, 0, 0, 1], GAUSS), ([-1, -1, 0, 1], SQRT2)):
        for _ in range(25):
            assert verify_transitivity_instance(f, K, random_instance(f, K, rng)).passed


def test_transitivity_rejects_non_disjoint_pairs():
    with pytest.raises(NotLinearlyDisjoint):
        compositum([-2, 0, 1], SQRT2)
    with pytest.raises(NotLinearlyDisjoint):
        verify_transitivity_instance([-2, 0, 1], SQRT2, [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        verify_transitivity_instance([-2, 0, 0, 1], GAUSS, [[0, 0], [0, 0], [0, 0]])


def test_norm_tower_factor():
    L = SimpleExt(SQRT2, [SQRT2([-3, 0]), 0, 1], "r3")
    r2 = L([SQRT2([0, 1]), SQRT2.zero])
    t = norm_tower_factor(L, r2, d=2)
    assert t.norm == 4 and t.subfield_degree == 2 and t.exponent == 2
    assert t.subfield_norm == -2 and t.consistent and t.is_dth_power
    q = norm_tower_factor(L, L([SQRT2([5, 0]), SQRT2.zero]))
    assert q.norm == 5 ** 4 and q.exponent == 4
    prim = L([SQRT2([0, 1]), SQRT2([1, 0])])     # sqrt2 + sqrt3
    p = norm_tower_factor(L, prim)
    assert p.exponent == 1 and p.consistent
    assert absolute_minpoly(L, prim) == [1, 0, -10, 0, 1]


def test_tower_plan_examples():
    assert tower_plan([9, 5], 3).verdict == GUARANTEED
    assert tower_plan([6], 3, form="cubic-field-norm").verdict == UNKNOWN
    assert tower_plan([6], 3, True, form="cubic-field-norm").verdict == GUARANTEED
    plan = tower_plan([9, 5, 6], 3, [False, False, True])
    assert [s.verdict for s in plan.step_verdicts] == [P_POWER, COPRIME, GALOIS]


def test_tower_plan_rejects_bad_input():
    with pytest.raises(ValueError):
        tower_plan([4], 4)
    with pytest.raises(ValueError):
        tower_plan([0], 3)
    with pytest.raises(ValueError):
        tower_plan([6], 5, form="cubic-composition")
    with pytest.raises(ValueError):
        tower_plan([6], 3, form="round-transfer")


def test_blackbox_sampler_reproducible():
    a = blackbox_identity_test(lambda v: v["x"] ** 2, lambda v: v["x"] * v["x"], ["x"], 2,
                               seed=4)
    b = blackbox_identity_test(lambda v: v["x"] ** 2, lambda v: v["x"] * v["x"], ["x"], 2,
                               seed=4)
    assert a.to_json() == b.to_json()
