import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normforms.exactalg import GF, QQ, SimpleExt, SparsePoly
from normforms.exactalg.matrix import RingMatrix
from normforms.extfields import norm_form
from normforms.forms import (AlgebraStructure, Form, FormFileError, classify_trivial_snp,
                             determinant_form, diagonal_form, dump_form, form_from_dict,
                             form_to_dict, generated_subgroup, homogeneity_defect,
                             is_nondegenerate, isometry_witness_check, load_form,
                             permits_composition_check, polarize, polarize_by_derivatives,
                             power_form, product_form, radical, scalar_times_form, scale,
                             value_set)
from normforms.forms.classify import ALL_UNITS, DTH_POWERS, UNCLASSIFIED


@st.composite
def random_forms(draw):
    d = draw(st.integers(2, 5))
    n = draw(st.integers(1, 4))
    names = tuple(f"x{i}" for i in range(1, n + 1))
    monos = [e for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d]
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4, unique=True))
    terms = {e: QQ(draw(st.integers(1, 6)) * draw(st.sampled_from([1, -1]))) for e in chosen}
    return Form(SparsePoly(names, terms), d, names)


@settings(max_examples=60)
@given(random_forms(), st.data())
def test_polarization_identities(phi, data):
    theta = polarize(phi)
    assert theta.arity == phi.degree
    assert theta.is_multilinear()
    assert theta.is_symmetric()
    assert theta.diagonal() == phi.poly
    assert theta.poly == polarize_by_derivatives(phi).poly
    v = [QQ(data.draw(st.integers(-3, 3))) for _ in range(phi.dim)]
    assert theta.evaluate([v] * phi.degree) == phi.evaluate(v)


@settings(max_examples=60)
@given(random_forms(), st.integers(-3, 3))
def test_forms_are_homogeneous(phi, t):
    assert homogeneity_defect(phi).is_zero()
    v = [QQ(k + 1) for k in range(phi.dim)]
    assert phi.evaluate([t * x for x in v]) == t ** phi.degree * phi.evaluate(v)


def test_polarization_is_additive_in_each_slot(rng):
    phi = norm_form(SimpleExt(QQ, [-2, 0, 0, 1]))
    theta = polarize(phi)
    for _ in range(20):
        u, v, w, z = ([QQ(rng.randint(-3, 3)) for _ in range(3)] for _ in range(4))
        s = [a + b for a, b in zip(u, v)]
        assert theta.evaluate([s, w, z]) == theta.evaluate([u, w, z]) + theta.evaluate([v, w, z])


def test_non_homogeneous_polynomial_rejected():
    x, y = SparsePoly.gens(["x", "y"])
    with pytest.raises(ValueError):
        Form(x ** 3 + y, 3, ("x", "y"))


def test_radical_of_diagonal_forms_is_trivial():
    for d in (2, 3, 4):
        for n in (1, 2, 3):
            phi = diagonal_form(list(range(1, n + 1)), d)
            assert radical(phi) == []
            assert is_nondegenerate(phi)


def test_radical_of_padded_form():
    x, y = SparsePoly.gens(["x", "y"])
    phi = Form(x ** 3 + 2 * y ** 3, 3, ("x", "y", "z", "w"))
    basis = radical(phi)
    assert len(basis) == 2
    span = RingMatrix(basis)
    assert span.rank() == 2
    assert all(vec[0] == 0 and vec[1] == 0 for vec in basis)
    assert not is_nondegenerate(phi)


def test_radical_detects_hidden_degeneracy():
    # (x + y)^3 only sees x + y, so x - y spans the radical
    x, y = SparsePoly.gens(["x", "y"])
    basis = radical(Form((x + y) ** 3, 3, ("x", "y")))
    assert len(basis) == 1
    a, b = basis[0]
    assert a == -b != 0


@pytest.mark.parametrize("minpoly", [[-5, 0, 1], [-2, 0, 0, 1], [-1, -1, 0, 1]])
def test_norm_forms_permit_composition(minpoly):
    phi = norm_form(SimpleExt(QQ, minpoly))
    assert phi.algebra is not None
    assert permits_composition_check(phi, phi.algebra).passed


def test_quaternion_norm_permits_composition():
    phi = diagonal_form([1, 1, 1, 1], 2)
    assert permits_composition_check(phi, AlgebraStructure.quaternions(-1, -1)).passed


def test_composition_fails_with_wrong_algebra():
    phi = diagonal_form([1, 2], 2)
    assert not permits_composition_check(phi, AlgebraStructure.complex_numbers()).passed


def test_determinant_form_permits_composition():
    phi = determinant_form(2)
    assert permits_composition_check(phi, phi.algebra).passed


def test_product_of_norms_permits_composition_on_direct_sum():
    # N1(a1)^2 * N2(a2) on Q(cbrt 2) + Q(sqrt 3): degree 2*3 + 2 = 8
    n1 = norm_form(SimpleExt(QQ, [-2, 0, 0, 1]), prefix="a")
    n2 = norm_form(SimpleExt(QQ, [-3, 0, 1]), prefix="b")
    phi = product_form(power_form(n1, 2), n2)
    assert phi.degree == 8 and phi.dim == 5
    assert permits_composition_check(phi, phi.algebra, "probabilistic", seed=2).passed


def test_scalar_times_form_composes():
    phi = scalar_times_form(diagonal_form([1], 2))
    assert phi.degree == 3
    assert permits_composition_check(phi, phi.algebra).passed


def test_classifier_clauses():
    assert classify_trivial_snp(diagonal_form([1, 2, 3, 5], 3)).verdict == DTH_POWERS
    assert classify_trivial_snp(diagonal_form([1, 2], 3)).verdict == DTH_POWERS
    assert classify_trivial_snp(diagonal_form([1], 4)).verdict == DTH_POWERS
    assert classify_trivial_snp(diagonal_form([2, 2, 2], 3)).clause == "constant-diagonal"
    assert classify_trivial_snp(diagonal_form([1, 2, 3], 3)).verdict == UNCLASSIFIED
    assert classify_trivial_snp(diagonal_form([1, 2], 2)).verdict == UNCLASSIFIED
    assert classify_trivial_snp(determinant_form(3)).verdict == ALL_UNITS
    assert classify_trivial_snp(scalar_times_form(diagonal_form([1, 1], 2))).verdict == ALL_UNITS
    assert not classify_trivial_snp(norm_form(SimpleExt(QQ, [-2, 0, 0, 1]))).trivial


def test_form_files_round_trip(tmp_path):
    for phi in (norm_form(SimpleExt(QQ, [-2, 0, 0, 1])), diagonal_form([1, 3], 3, field=GF(7)),
                scale(diagonal_form([1, 2], 2), QQ.parse("3/2"))):
        path = tmp_path / "phi.json"
        dump_form(phi, path)
        back = load_form(path)
        assert back == phi
        assert form_to_dict(back) == form_to_dict(phi)
        assert (back.algebra is None) == (phi.algebra is None)


def test_malformed_form_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FormFileError):
        load_form(bad)
    with pytest.raises(FormFileError):
        form_from_dict({"degree": 2, "variables": ["x"], "terms": [["1", [1, 1]]]})
    with pytest.raises(FormFileError):
        form_from_dict({"degree": 2, "dim": 3, "variables": ["x"], "terms": [["1", [2]]]})


def test_value_set_of_cube_over_f7():
    vs = value_set(diagonal_form([1], 3, field=GF(7)))
    assert vs.values == {1, 6}
    assert vs.subgroup == {1, 6}
    assert generated_subgroup({3}, 7) == frozenset(range(1, 7))


def test_isometry_witness_check():
    x, y = SparsePoly.gens(["x", "y"])
    phi = Form(x * x + y * y, 2, ("x", "y"))
    psi = Form(x * x + y * y, 2, ("x", "y"))
    swap = RingMatrix([[0, 1], [1, 0]])
    assert isometry_witness_check(phi, psi, swap).passed
    assert not isometry_witness_check(phi, psi, RingMatrix([[1, 1], [0, 1]])).passed
