"""Matrices over a quaternion division algebra and the reduced norm of their determinant.

Only ``Nrd(det(M))`` is computed (here ``ndet``): row reduction with left
elementary operations leaves the Dieudonne determinant unchanged up to sign,
and row swaps contribute ``Nrd(-1) = 1``, so the reduced norm of the product of
the pivots is well defined.
"""

from __future__ import annotations

from typing import Sequence

from ..exactalg.ext import QuotientRing, SimpleExt
from ..exactalg.matrix import RingMatrix
from ..report import VerifyReport
from .quaternion import Quaternion, QuaternionAlgebra, split_embedding

PIVOTS = ("first", "last")


class QuatMatrix:
    """Square or rectangular matrix with :class:`Quaternion` entries."""

    __slots__ = ("rows", "A")

    def __init__(self, rows: Sequence[Sequence], A: QuaternionAlgebra):
        rows = [[A(e) for e in r] for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be nonempty and equally long")
        self.rows = rows
        self.A = A

    @classmethod
    def identity(cls, n: int, A: QuaternionAlgebra) -> "QuatMatrix":
        return cls([[A.one if i == j else A.zero for j in range(n)] for i in range(n)], A)

    @classmethod
    def diag(cls, entries: Sequence, A: QuaternionAlgebra) -> "QuatMatrix":
        n = len(entries)
        return cls([[A(entries[i]) if i == j else A.zero for j in range(n)] for i in range(n)],
                   A)

    @classmethod
    def random(cls, n: int, A: QuaternionAlgebra, rng, bound: int = 3) -> "QuatMatrix":
        return cls([[A.random(rng, bound) for _ in range(n)] for _ in range(n)], A)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix([[p + q for p, q in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                          self.A)

    def __mul__(self, other):
        if not isinstance(other, QuatMatrix):
            return QuatMatrix([[e * other for e in r] for r in self.rows], self.A)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = self.A.zero
                for p, q in zip(r, c):
                    acc = acc + p * q
                row.append(acc)
            out.append(row)
        return QuatMatrix(out, self.A)

    def __rmul__(self, scalar):
        return QuatMatrix([[scalar * e for e in r] for r in self.rows], self.A)

    def __eq__(self, other):
        return isinstance(other, QuatMatrix) and self.rows == other.rows

    def inverse(self) -> "QuatMatrix":
        """Gauss-Jordan over the division ring; raises ``ZeroDivisionError`` if singular."""
        n = self.n
        M = [list(r) + [self.A.one if i == j else self.A.zero for j in range(n)]
             for i, r in enumerate(self.rows)]
        for j in range(n):
            piv = next((i for i in range(j, n) if M[i][j]), None)
            if piv is None:
                raise ZeroDivisionError("singular quaternion matrix")
            M[j], M[piv] = M[piv], M[j]
            inv = M[j][j].inverse()
            M[j] = [inv * e for e in M[j]]
            for i in range(n):
                if i != j and M[i][j]:
                    f = M[i][j]
                    M[i] = [e - f * p for e, p in zip(M[i], M[j])]
        return QuatMatrix([r[n:] for r in M], self.A)

    def complex_image(self) -> RingMatrix:
        """``2n x 2n`` commutative image when ``a = 1`` (entrywise split embedding)."""
        n = self.n
        out = [[None] * (2 * n) for _ in range(2 * n)]
        for i, r in enumerate(self.rows):
            for j, e in enumerate(r):
                m = split_embedding(e)
                for s in range(2):
                    for t in range(2):
                        out[2 * i + s][2 * j + t] = m[s][t]
        return RingMatrix(out)

    def __repr__(self):
        return "QuatMatrix(" + "; ".join(", ".join(map(repr, r)) for r in self.rows) + ")"


def ndet(M: QuatMatrix, pivot: str = "first", *, require_division: bool = True):
    """``Nrd`` of the Dieudonne determinant, by reduction to upper-triangular form."""
    if pivot not in PIVOTS:
        raise ValueError(f"pivot strategy must be one of {PIVOTS}")
    if M.n != len(M.rows[0]):
        raise ValueError("ndet needs a square matrix")
    if require_division:
        M.A.require_division()
    rows = [list(r) for r in M.rows]
    n = len(rows)
    result = M.A.field.one
    for j in range(n):
        cand = [i for i in range(j, n) if rows[i][j].nrd()]
        if not cand:
            if any(rows[i][j] for i in range(j, n)):
                raise ZeroDivisionError("column has only zero divisors; algebra is split")
            return M.A.field.zero
        p = cand[0] if pivot == "first" else cand[-1]
        rows[j], rows[p] = rows[p], rows[j]
        inv = rows[j][j].inverse()
        for i in range(j + 1, n):
            if rows[i][j]:
                f = rows[i][j] * inv
                rows[i] = [e - f * q for e, q in zip(rows[i], rows[j])]
        result = result * rows[j][j].nrd()
    return result


def rho_of_delta(A: QuaternionAlgebra, K: SimpleExt, alphas: Sequence) -> QuatMatrix:
    """``sum_i alpha_i * rho(w_i)`` for the power basis ``w_i`` of ``K``."""
    if len(alphas) != K.degree:
        raise ValueError(f"need {K.degree} quaternion coordinates, got {len(alphas)}")
    n = K.degree
    out = [[A.zero] * n for _ in range(n)]
    for k, alpha in enumerate(alphas):
        alpha = A(alpha)
        R = K.regular_rep(K.gen_power(k))
        for i in range(n):
            for j in range(n):
                if R[i, j]:
                    out[i][j] = out[i][j] + alpha * R[i, j]
    return QuatMatrix(out, A)


def delta_over_k(A: QuaternionAlgebra, K: QuotientRing, alphas: Sequence) -> Quaternion:
    """``Delta = sum_i alpha_i w_i`` as a quaternion with coordinates in ``K``."""
    coords = []
    for c in range(4):
        acc = K.zero
        for k, alpha in enumerate(alphas):
            acc = acc + K.gen_power(k) * A(alpha).c[c]
        coords.append(acc)
    return A.over(coords)


ANCHORS = ["norm of a reduced norm equals the reduced norm of the determinant of rho(Delta)"]


def verify_reduced_norm_transfer(A: QuaternionAlgebra, K: SimpleExt, alphas: Sequence,
                                 pivot: str = "first") -> VerifyReport:
    """``N_{K/F}(Nrd_{A(x)K}(Delta)) = ndet(rho(Delta))`` exactly."""
    A.require_division()
    alphas = [A(a) for a in alphas]
    lhs = K.norm(delta_over_k(A, K, alphas).nrd())
    rhs = ndet(rho_of_delta(A, K, alphas), pivot)
    return VerifyReport("reduced-norm-transfer", "exact", lhs == rhs, ANCHORS,
                        {"algebra": [A.a, A.b], "K": K.descriptor(),
                         "delta": [list(a.c) for a in alphas], "pivot": pivot},
                        {"lhs": lhs, "rhs": rhs},
                        {"division_certificate": A.division})
