"""Closed forms for ``N_{K/F}(Nrd(x + y*sqrt(c)))`` with an unknown constant.

For ``z = x + y*sqrt(c)`` with ``x, y`` in the algebra, the norm of the
reduced norm of ``z`` is compared against

* quaternions: ``Nrd(y (x y^-1 x - gamma y))``
* split degree 3: ``det(x y# x - gamma det(y) y) / det(y)^k``

for a sweep of candidate constants ``gamma`` (and normalization exponents
``k``). The constant is not fixed in advance: every candidate is tested on every
instance and the consistent ones are reported.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..exactalg.ext import quadratic_ring
from ..exactalg.fields import QQ, inverse
from ..exactalg.matrix import RingMatrix, SingularMatrix
from ..report import VerifyReport
from .quaternion import Quaternion, QuaternionAlgebra

SMALL_RATIONALS = (-3, -2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2, 3)


def candidate_constants(c, degree: int) -> list:
    """``c``, ``-c``, the algebra degree, ``c^2``, ``1/c`` and small rationals, deduplicated."""
    c = QQ(c)
    out = []
    for g in (c, -c, QQ(degree), c * c, inverse(c), *map(QQ, SMALL_RATIONALS)):
        if g not in out:
            out.append(g)
    return out


def _label(g) -> str:
    return QQ.format(QQ(g))


def quaternion_lhs(A: QuaternionAlgebra, c, x: Quaternion, y: Quaternion):
    """``N_{K/F}(Nrd_{A(x)K}(x + y s))`` with ``s^2 = c``, computed in ``F[s]/(s^2-c)``."""
    K = quadratic_ring(QQ(c))
    s = K.gen
    z = A.over([K.embed(p) + s * q for p, q in zip(x.c, y.c)])
    w = z.nrd()
    return (w * K.conj(w)).coords[0]


def quaternion_rhs(x: Quaternion, y: Quaternion, gamma):
    inner = x * y.inverse() * x - y * gamma
    return (y * inner).nrd()


def probe_quaternion_constant(A: QuaternionAlgebra, c, pairs: Iterable, candidates=None
                              ) -> VerifyReport:
    """Sweep ``gamma`` over the candidates; report those matching every ``(x, y)``."""
    c = QQ(c)
    if not c:
        raise ValueError("c must be nonzero")
    candidates = list(candidates) if candidates is not None else candidate_constants(c, 2)
    survivors = {_label(g): True for g in candidates}
    failures: dict[str, dict] = {}
    count = 0
    for x, y in pairs:
        x, y = A(x), A(y)
        if not y.nrd():
            raise ValueError(f"y = {y} is not invertible")
        count += 1
        lhs = quaternion_lhs(A, c, x, y)
        for g in candidates:
            key = _label(g)
            if survivors[key] and quaternion_rhs(x, y, g) != lhs:
                survivors[key] = False
                failures[key] = {"x": list(x.c), "y": list(y.c), "lhs": lhs,
                                 "rhs": quaternion_rhs(x, y, g)}
    consistent = [k for k, ok in survivors.items() if ok]
    resolved = consistent[0] if len(consistent) == 1 else None
    return VerifyReport(
        "quaternion-constant-probe", "exact", bool(consistent),
        ["norm of Nrd(x + y sqrt(c)) against Nrd(y(x y^-1 x - gamma y))"],
        {"algebra": [A.a, A.b], "c": c, "instances": count,
         "candidates": [_label(g) for g in candidates]},
        {"consistent": consistent, "resolved": resolved,
         "resolved_equals_c": resolved == _label(c),
         "first_failures": failures},
    )


# -- split degree 3 ----------------------------------------------------------------

def second_coefficient(x: RingMatrix):
    """``S(x)``: the sum of principal 2x2 minors, ``(T^2 - tr(x^2)) / 2``."""
    t = x.trace()
    return (t * t - (x * x).trace()) * QQ(Fraction(1, 2))


def sharp3(x: RingMatrix) -> RingMatrix:
    """``x# = x^2 - T(x) x + S(x) 1``; equals the adjugate for 3x3 matrices."""
    if x.shape != (3, 3):
        raise ValueError("sharp3 needs a 3x3 matrix")
    return x * x - x * x.trace() + RingMatrix.identity(3) * second_coefficient(x)


def adjugate(x: RingMatrix) -> RingMatrix:
    n = x.nrows
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = RingMatrix([[x[r, s] for s in range(n) if s != i]
                                for r in range(n) if r != j])
            row.append(minor.det() * (-1) ** (i + j))
        out.append(row)
    return RingMatrix(out)


def split3_lhs(c, x: RingMatrix, y: RingMatrix):
    """``N_{K/F}(det(x + y s))`` with ``s^2 = c``."""
    K = quadratic_ring(QQ(c))
    s = K.gen
    z = RingMatrix([[K.embed(x[i, j]) + s * y[i, j] for j in range(3)] for i in range(3)])
    w = z.det()
    return (w * K.conj(w)).coords[0]


def split3_rhs(x: RingMatrix, y: RingMatrix, gamma, k: int):
    dy = y.det()
    if not dy:
        raise SingularMatrix("y must be invertible")
    M = x * sharp3(y) * x - y * (QQ(gamma) * dy)
    return M.det() * inverse(QQ(dy) ** k)


def verify_split3_constant(c, pairs: Iterable[tuple], candidates=None,
                           exponents: Sequence[int] = (1, 2)) -> VerifyReport:
    """Sweep ``(gamma, k)``; report the pairs matching every ``(x, y)``."""
    c = QQ(c)
    if not c:
        raise ValueError("c must be nonzero")
    candidates = list(candidates) if candidates is not None else candidate_constants(c, 3)
    keys = [(_label(g), k) for g in candidates for k in exponents]
    alive = dict.fromkeys(keys, True)
    count = 0
    for x, y in pairs:
        x, y = _mat(x), _mat(y)
        if not y.det():
            raise SingularMatrix("y must be invertible")
        count += 1
        lhs = split3_lhs(c, x, y)
        for g in candidates:
            for k in exponents:
                key = (_label(g), k)
                if alive[key] and split3_rhs(x, y, g, k) != lhs:
                    alive[key] = False
    consistent = [{"gamma": g, "exponent": k} for (g, k), ok in alive.items() if ok]
    resolved = consistent[0] if len(consistent) == 1 else None
    return VerifyReport(
        "split-cubic-constant-probe", "exact", bool(consistent),
        ["norm of det(x + y sqrt(c)) against det(x y# x - gamma det(y) y) / det(y)^k"],
        {"c": c, "instances": count, "candidates": [_label(g) for g in candidates],
         "exponents": list(exponents)},
        {"consistent": consistent, "resolved": resolved,
         "stated_normalization_matches": any(r["exponent"] == 1 for r in consistent)},
    )


def _mat(x) -> RingMatrix:
    return x if isinstance(x, RingMatrix) else RingMatrix([[QQ(e) for e in r] for r in x])


def random_matrix(rng, bound: int = 4, invertible: bool = False) -> RingMatrix:
    while True:
        M = RingMatrix([[QQ(rng.randint(-bound, bound)) for _ in range(3)] for _ in range(3)])
        if not invertible or M.det():
            return M
