from fractions import Fraction

import pytest

from normforms.exactalg import GF, QQ, RingMatrix, SimpleExt, SparsePoly, identity_test
from normforms.extfields import norm_form
from normforms.forms import Form, diagonal_form, isometry_witness_check, power_form, scale
from normforms.forms.isometry import BudgetExceeded
from normforms.verify import (NotCompositionType, NotInvertibleElement, bounded_witness_search,
                              example_quartic, example_sextic, field_table, norm_map_agrees,
                              pfister_coefficients, primitive_polynomial, quartic_oracle,
                              roundness_check, roundness_witness, sextic_oracle, snp_bruteforce)

CUBE2 = SimpleExt(QQ, [-2, 0, 0, 1], "alpha")


# -- finite fields -------------------------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_power_norm_agrees_with_regular_representation(p, m):
    assert norm_map_agrees(p, m)


def test_primitive_polynomial_generates():
    T = field_table(7, 2)
    assert len(set(T.exp)) == 48
    assert primitive_polynomial(7, 2)[-1] == 1


def test_cube_snp_over_f7():
    rep = snp_bruteforce(diagonal_form([1], 3, field=GF(7)), 2)
    assert rep.passed
    assert rep.witness["D_F"] == [1, 6]
    assert rep.witness["norms_of_D_K"] == [1, 6]


@pytest.mark.parametrize("phi, m", [
    (diagonal_form([1], 2, field=GF(5)), 3),
    (power_form(diagonal_form([1], 2, field=GF(5)), 2), 2),
    (norm_form(SimpleExt(GF(5), [-2, 0, 1])), 2),
    (norm_form(SimpleExt(GF(7), [-3, 0, 1])), 3),
    (norm_form(SimpleExt(GF(5), [1, 1, 0, 1])), 2),
    (norm_form(SimpleExt(GF(7), [-2, 0, 0, 1])), 3),
], ids=["x2-F5-m3", "x2sq-F5-m2", "N2-F5", "N2-F7", "N3-F5", "N3-F7"])
def test_snp_grid_passes(phi, m):
    rep = snp_bruteforce(phi, m)
    assert rep.passed, rep.witness.get("counterexample")


def test_full_norm_form_represents_every_unit():
    rep = snp_bruteforce(norm_form(SimpleExt(GF(7), [-3, 0, 1])), 2)
    assert rep.witness["D_F"] == list(range(1, 7))


def test_snp_needs_composition_type():
    x, y = SparsePoly.gens(["x", "y"], GF(7))
    phi = Form(x ** 3 + y ** 3 * 2 + x * y * y, 3, ("x", "y"))
    with pytest.raises(NotCompositionType):
        snp_bruteforce(phi, 2)


# -- bounded witness search ----------------------------------------------------------------

def test_witness_for_norm_three():
    phi = norm_form(CUBE2)
    hit = bounded_witness_search(phi, 3, 2)
    assert hit["found"] and hit["point"] == [1, 1, 0]
    assert phi.evaluate([QQ(c) for c in hit["point"]]) == 3


def test_witness_for_one():
    assert bounded_witness_search(norm_form(CUBE2), 1, 2)["point"] == [1, 0, 0]


def test_rational_witness():
    phi = diagonal_form([1], 2)
    hit = bounded_witness_search(phi, Fraction(9, 4), 3)
    assert hit["found"] and phi.evaluate([QQ(hit["point"][0])]) == Fraction(9, 4)


def test_exhaustion_is_inconclusive():
    out = bounded_witness_search(diagonal_form([1, 1], 2), 3, 3)
    assert out == {"found": False, "exhausted": True, "height": 3, "tried": out["tried"]}


def test_witness_search_respects_budget():
    with pytest.raises(BudgetExceeded):
        bounded_witness_search(norm_form(CUBE2), 5, 50, budget=1000)


# -- Pfister transfers ---------------------------------------------------------------------

def test_pfister_coefficients():
    a, b = SparsePoly.gens(["a", "b"])
    assert pfister_coefficients(["a", "b"]) == [SparsePoly.const(1), -a, -b, a * b]
    assert pfister_coefficients(["a"], "plus")[1] == a


def test_quartic_closed_form_for_one_parameter():
    u1, u2, w1, w2, a, c = SparsePoly.gens(["u1", "u2", "w1", "w2", "a", "c"])
    q = u1 ** 2 - a * u2 ** 2 - c * w1 ** 2 + a * c * w2 ** 2
    expected = q * q - 4 * a * c * (u2 * w1 - u1 * w2) ** 2
    assert identity_test(quartic_oracle(["a"]).poly, expected).passed


def test_quartic_specializes_to_square_at_zero():
    u1, u2 = SparsePoly.gens(["u1", "u2"])
    oracle = quartic_oracle([3], c=0)
    assert identity_test(oracle.poly, (u1 ** 2 - 3 * u2 ** 2) ** 2).passed


@pytest.mark.parametrize("r", [1, 2])
def test_quartic_oracle_equals_transfer(r):
    out = example_quartic(r)
    rep = out["report"]
    assert rep.passed
    assert all(rep.witness["oracle_equals_transfer"].values())
    assert len(rep.witness["formula_matches"]) == 8
    assert out["oracle"].degree == 4 and out["oracle"].dim == 2 ** (r + 1)


def test_quartic_convention_table_is_recorded():
    table = example_quartic(1)["report"].witness["formula_matches"]
    assert [k for k, v in table.items() if v] == ["plus/block/bilinear-square"]


def test_quartic_with_rational_parameters():
    assert example_quartic(2, [2, -3], c=5)["report"].passed


def test_sextic_oracle_shape_and_cross_check():
    rep = example_sextic(1)["report"]
    assert rep.passed
    assert rep.witness["degree"] == 6 and rep.witness["dimension"] == 6
    assert len(rep.witness["interpretation_matches"]) == 6


def test_sextic_interpretations_recorded():
    rep = example_sextic(1)["report"]
    assert rep.witness["matching_interpretations"] == ["plus/cube-with-linear-products"]


def test_sextic_specializes_to_cube():
    oracle = sextic_oracle(["a"])
    names = oracle.variables
    point = {n: SparsePoly.var(n, names) if n[0] == "u" else SparsePoly.zero(names)
             for n in names}
    a, u1, u2 = SparsePoly.gens(["a", "u1", "u2"])
    restricted = oracle.poly.substitute(point)
    assert identity_test(restricted, (u1 ** 2 - a * u2 ** 2) ** 3).passed


# -- roundness -----------------------------------------------------------------------------

def test_unit_gives_identity_witness():
    phi = norm_form(CUBE2)
    assert roundness_witness(phi, [1, 0, 0]) == RingMatrix.identity(3)


def test_witness_for_one_plus_alpha():
    phi = norm_form(CUBE2)
    rep = roundness_check(phi, [1, 1, 0])
    assert rep.passed and rep.parameters["factor"] == 3
    # columns are (1 + alpha) * 1, (1 + alpha) * alpha, (1 + alpha) * alpha^2
    assert rep.witness["matrix"] == [[1, 0, 2], [1, 1, 0], [0, 1, 1]]


def test_random_roundness_witnesses(rng):
    forms = [norm_form(CUBE2), norm_form(SimpleExt(QQ, [-5, 0, 1])),
             norm_form(SimpleExt(QQ, [-1, -1, 0, 1]))]
    done = 0
    while done < 120:
        phi = forms[done % 3]
        x0 = [rng.randint(-4, 4) for _ in range(phi.dim)]
        if not phi.evaluate([QQ(c) for c in x0]):
            continue
        assert roundness_check(phi, x0).passed
        done += 1


def test_witnesses_compose(rng):
    phi = norm_form(CUBE2)
    for _ in range(20):
        x0 = [rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2)]
        y0 = [rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2)]
        fx, fy = (phi.evaluate([QQ(c) for c in v]) for v in (x0, y0))
        M = roundness_witness(phi, x0) * roundness_witness(phi, y0)
        assert isometry_witness_check(scale(phi, fx * fy), phi, M).passed


def test_non_invertible_point():
    with pytest.raises(NotInvertibleElement):
        roundness_witness(norm_form(CUBE2), [0, 0, 0])
    with pytest.raises(ValueError):
        roundness_witness(diagonal_form([1, 2, 3], 3), [1, 0, 0])
