"""Finite-dimensional algebras given by structure constants, and the
composition check ``phi(x*y) = phi(x)*phi(y)``."""

from __future__ import annotations

from typing import Sequence

from ..exactalg.fields import QQ, Field
from ..exactalg.identity import identity_test
from ..exactalg.poly import SparsePoly
from ..report import VerifyReport


class AlgebraStructure:
    """Bilinear product ``e_i * e_j = sum_k c[i][j][k] e_k`` on ``F^n``."""

    def __init__(self, constants, unit: Sequence | None = None, field: Field = QQ,
                 name: str = "algebra"):
        n = len(constants)
        if any(len(row) != n or any(len(v) != n for v in row) for row in constants):
            raise ValueError("structure constants must have shape n x n x n")
        self.n = n
        self.c = [[list(v) for v in row] for row in constants]
        self.field = field
        self.name = name
        self.unit = list(unit) if unit is not None else None
        if self.unit is not None:
            self._check_unit()

    def _check_unit(self):
        for i in range(self.n):
            e = [0] * self.n
            e[i] = 1
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise ValueError(f"declared unit is not a two-sided identity in {self.name}")

    @property
    def dim(self) -> int:
        return self.n

    def mul(self, x: Sequence, y: Sequence) -> list:
        n = self.n
        out = [None] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                xy = x[i] * y[j]
                for k, c in enumerate(self.c[i][j]):
                    if c:
                        t = xy * c
                        out[k] = t if out[k] is None else out[k] + t
        zero = (x[0] * 0) if n else 0
        return [zero if v is None else v for v in out]

    def left_matrix(self, x: Sequence):
        """Matrix of ``y -> x*y`` (column j is ``x*e_j``)."""
        from ..exactalg.matrix import RingMatrix

        cols = []
        for j in range(self.n):
            e = [0] * self.n
            e[j] = 1
            cols.append(self.mul(x, e))
        return RingMatrix([[cols[j][i] for j in range(self.n)] for i in range(self.n)])

    def direct_sum(self, other: "AlgebraStructure") -> "AlgebraStructure":
        n, m = self.n, other.n
        N = n + m
        c = [[[0] * N for _ in range(N)] for _ in range(N)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    c[i][j][k] = self.c[i][j][k]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    c[n + i][n + j][n + k] = other.c[i][j][k]
        unit = None
        if self.unit is not None and other.unit is not None:
            unit = list(self.unit) + list(other.unit)
        return AlgebraStructure(c, unit, self.field, f"{self.name}+{other.name}")

    # -- standard tables ------------------------------------------------
    @classmethod
    def componentwise(cls, n: int, field: Field = QQ) -> "AlgebraStructure":
        c = [[[1 if i == j == k else 0 for k in range(n)] for j in range(n)] for i in range(n)]
        return cls(c, [1] * n, field, "componentwise")

    @classmethod
    def complex_numbers(cls, field: Field = QQ) -> "AlgebraStructure":
        c = [[[1, 0], [0, 1]], [[0, 1], [-1, 0]]]
        return cls(c, [1, 0], field, "complex")

    @classmethod
    def from_extension(cls, E) -> "AlgebraStructure":
        """Multiplication of ``E`` in the power basis ``1, a, ..., a^(d-1)``."""
        d = E.degree
        powers = [E.gen_power(k) for k in range(2 * d - 1)]
        c = [[list(powers[i + j].coords) for j in range(d)] for i in range(d)]
        field = E.base if isinstance(E.base, Field) else QQ
        unit = [1] + [0] * (d - 1)
        return cls(c, unit, field, getattr(E, "name", "extension"))

    @classmethod
    def quaternions(cls, a, b, field: Field = QQ) -> "AlgebraStructure":
        """Basis 1, i, j, k with i^2 = a, j^2 = b, k = ij = -ji."""
        table = {
            (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (a, 0), (1, 2): (1, 3), (1, 3): (a, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (b, 0), (2, 3): (-b, 1),
            (3, 0): (1, 3), (3, 1): (-a, 2), (3, 2): (b, 1), (3, 3): (-a * b, 0),
        }
        c = [[[0] * 4 for _ in range(4)] for _ in range(4)]
        for (i, j), (coef, k) in table.items():
            c[i][j][k] = coef
        return cls(c, [1, 0, 0, 0], field, f"quaternion({a},{b})")

    @classmethod
    def matrices(cls, k: int, field: Field = QQ) -> "AlgebraStructure":
        """``Mat_k`` with basis E_rs in row-major order."""
        n = k * k
        c = [[[0] * n for _ in range(n)] for _ in range(n)]
        for r in range(k):
            for s in range(k):
                for t in range(k):
                    c[r * k + s][s * k + t][r * k + t] = 1
        unit = [1 if r == s else 0 for r in range(k) for s in range(k)]
        return cls(c, unit, field, f"Mat{k}")

    def __repr__(self):
        return f"AlgebraStructure({self.name}, dim={self.n})"


def permits_composition_check(phi, A: AlgebraStructure, mode: str = "exact",
                              seed: int = 0) -> VerifyReport:
    """Check ``phi(x*y) = phi(x) phi(y)`` as an identity in ``2n`` variables."""
    if phi.dim != A.dim:
        raise ValueError(f"form dimension {phi.dim} differs from algebra dimension {A.dim}")
    n = phi.dim
    taken = set(phi.poly.vars)
    xs = [_fresh("p", i, taken) for i in range(n)]
    ys = [_fresh("q", i, taken) for i in range(n)]
    names = tuple(xs + ys)
    gens = SparsePoly.gens(names, phi.field)
    x, y = gens[:n], gens[n:]
    lhs = phi.evaluate(A.mul(x, y))
    rhs = phi.evaluate(x) * phi.evaluate(y)
    if not isinstance(lhs, SparsePoly):
        lhs = SparsePoly.const(lhs, (), phi.field)
    rep = identity_test(lhs, rhs, mode, seed=seed, identity="composition")
    rep.parameters.update({"algebra": A.name, "dimension": n, "degree": phi.degree})
    return rep


def _fresh(prefix: str, i: int, taken: set) -> str:
    name = f"{prefix}{i + 1}"
    while name in taken:
        name += "_"
    return name
