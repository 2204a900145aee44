from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from normforms import VerifyReport, combine
from normforms.exactalg import QQ, RingMatrix, SimpleExt

keys = st.text("abcdefgh_", min_size=1, max_size=6)
scalars = st.one_of(st.integers(-10 ** 6, 10 ** 6), st.booleans(), st.none(), st.text(max_size=8),
                    st.fractions(max_denominator=50))
payload = st.recursive(scalars, lambda inner: st.one_of(
    st.lists(inner, max_size=4), st.dictionaries(keys, inner, max_size=4)), max_leaves=12)

reports = st.builds(
    VerifyReport,
    identity=keys, mode=st.sampled_from(["exact", "probabilistic", "exhaustive"]),
    passed=st.booleans(), anchors=st.lists(st.text(max_size=12), max_size=2),
    parameters=st.dictionaries(keys, payload, max_size=4),
    witness=st.dictionaries(keys, payload, max_size=4),
    conventions=st.dictionaries(keys, payload, max_size=2),
    seed=st.one_of(st.none(), st.integers(0, 2 ** 32)),
    wall_time=st.one_of(st.none(), st.floats(0, 100, allow_nan=False)),
)


@settings(max_examples=200)
@given(reports)
def test_json_round_trip(r):
    assert VerifyReport.from_json(r.to_json()) == r


def test_exact_values_are_serialized():
    K = SimpleExt(QQ, [-2, 0, 1], "r")
    r = VerifyReport("x", "exact", True, witness={"q": Fraction(3, 4), "m": RingMatrix.identity(2),
                                                  "e": K([1, 2]), "s": {3, 1, 2}})
    assert r.witness == {"q": "3/4", "m": [[1, 0], [0, 1]], "e": ["1", "2"], "s": [1, 2, 3]}
    assert VerifyReport.from_json(r.to_json()) == r


def test_combine():
    ok = VerifyReport("a", "exact", True)
    bad = VerifyReport("a", "probabilistic", False, witness={"v": 1})
    assert combine("batch", [ok, ok]).passed
    c = combine("batch", [ok, bad])
    assert not c.passed and c.witness["failures"] == 1
    assert c.witness["first_failure"]["witness"] == {"v": 1}
    assert c.mode == "exact+probabilistic"
