"""Dense matrices over commutative rings with exact determinants.

Entries can be anything with ring operators: rationals, ``ModInt``,
extension elements, :class:`SparsePoly`, or elements of a quotient ring.
Two determinant algorithms are provided and are expected to agree:

* ``cofactor`` -- division-free Laplace expansion, memoized over column
  subsets (O(n 2^n) ring operations), valid over any commutative ring;
* ``bareiss`` -- fraction-free elimination, needs exact division (integral
  domains: fields and polynomial rings).
"""

from __future__ import annotations

from typing import Callable, Sequence

from .fields import divide
from .poly import SparsePoly


class SingularMatrix(ValueError):
    """The matrix is not invertible."""


def exact_div(a, b):
    """``a / b`` where the quotient is known to exist in the ring."""
    if isinstance(b, int) and b == 1:
        return a
    if isinstance(a, SparsePoly):
        return a / b
    return divide(a, b)


class RingMatrix:
    """Rectangular matrix stored as a list of rows."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix rows have different lengths")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, one=1) -> "RingMatrix":
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> "RingMatrix":
        zero = entries[0] * 0
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "RingMatrix") -> "RingMatrix":
        zero = blocks[0].zero
        n = sum(b.nrows for b in blocks)
        rows = [[zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls(rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def zero(self):
        return self.rows[0][0] * 0

    @property
    def one(self):
        return self.rows[0][0] * 0 + 1

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, fn: Callable) -> "RingMatrix":
        return RingMatrix([[fn(x) for x in r] for r in self.rows])

    def transpose(self) -> "RingMatrix":
        return RingMatrix([list(c) for c in zip(*self.rows)])

    def trace(self):
        self._need_square()
        acc = self.rows[0][0]
        for i in range(1, self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RingMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RingMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = None
                    for a, b in zip(r, c):
                        if not a or not b:
                            continue
                        t = a * b
                        acc = t if acc is None else acc + t
                    row.append(acc if acc is not None else r[0] * 0)
                out.append(row)
            return RingMatrix(out)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self.rows:
            acc = None
            for a, v in zip(r, vec):
                t = a * v
                acc = t if acc is None else acc + t
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, RingMatrix) or self.shape != other.shape:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def __repr__(self):
        return "RingMatrix(" + repr(self.rows) + ")"

    # -- determinants -------------------------------------------------------
    def _need_square(self):
        if not self.is_square():
            raise ValueError(f"determinant of non-square {self.nrows}x{self.ncols} matrix")

    def det(self, method: str = "auto"):
        self._need_square()
        if method == "auto":
            method = "cofactor" if self.nrows <= 6 else "bareiss"
        if method == "cofactor":
            return self.det_cofactor()
        if method == "bareiss":
            return self.det_bareiss()
        raise ValueError(f"unknown determinant method {method!r}")

    def det_cofactor(self):
        """Laplace expansion along rows, memoized on column subsets."""
        self._need_square()
        n = self.nrows
        a = self.rows
        one = self.one
        dp = {0: one}
        for k in range(n):
            row = a[k]
            nxt = {}
            for mask, sub in dp.items():
                if not sub:
                    continue
                above = 0
                for j in range(n - 1, -1, -1):
                    bit = 1 << j
                    if mask & bit:
                        above += 1
                        continue
                    x = row[j]
                    if not x:
                        continue
                    t = sub * x
                    key = mask | bit
                    cur = nxt.get(key)
                    if above % 2:
                        nxt[key] = -t if cur is None else cur - t
                    else:
                        nxt[key] = t if cur is None else cur + t
            dp = nxt
        return dp.get((1 << n) - 1, self.zero)

    def det_bareiss(self):
        """Fraction-free Gaussian elimination (Bareiss)."""
        self._need_square()
        n = self.nrows
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if not m[k][k]:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return self.zero
            pivot = m[k][k]
            for i in range(k + 1, n):
                mik = m[i][k]
                for j in range(k + 1, n):
                    num = m[i][j] * pivot - mik * m[k][j]
                    m[i][j] = exact_div(num, prev)
            prev = pivot
        d = m[n - 1][n - 1]
        return d if sign == 1 else -d

    # -- linear algebra over a field ----------------------------------------
    def rref(self):
        """Reduced row echelon form and pivot columns (entries from a field)."""
        m = [list(r) for r in self.rows]
        rows, cols = self.shape
        pivots = []
        r = 0
        for c in range(cols):
            pr = next((i for i in range(r, rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [divide(x, pv) for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list]:
        """Basis of the right kernel ``{v : M v = 0}``."""
        m, pivots = self.rref()
        cols = self.ncols
        zero, one = self.zero, self.one
        free = [c for c in range(cols) if c not in pivots]
        basis = []
        for f in free:
            v = [zero] * cols
            v[f] = one
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][f]
            basis.append(v)
        return basis

    def inverse(self) -> "RingMatrix":
        """Gauss-Jordan inverse over a field."""
        self._need_square()
        n = self.nrows
        zero, one = self.zero, self.one
        aug = RingMatrix([list(r) + [one if i == j else zero for j in range(n)]
                          for i, r in enumerate(self.rows)])
        m, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return RingMatrix([row[n:] for row in m])

    def solve(self, rhs: Sequence) -> list:
        inv = self.inverse()
        return inv.apply(list(rhs))


def det(M: RingMatrix, method: str = "auto"):
    return M.det(method)


def companion(minpoly: Sequence) -> RingMatrix:
    """Companion matrix of a monic polynomial (low degree coefficients first).

    This is the matrix of multiplication by the generator in the power basis.
    """
    d = len(minpoly) - 1
    zero = minpoly[0] * 0
    rows = [[zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = zero + 1
    for i in range(d):
        rows[i][d - 1] = -minpoly[i]
    return RingMatrix(rows)


def flatten_tower_matrix(M: RingMatrix, to_base: Callable[[object], RingMatrix]) -> RingMatrix:
    """Replace each entry by its own matrix (block substitution).

    Used to turn a matrix over ``K`` into one over a subfield, given the
    regular representation ``to_base`` of ``K`` over that subfield.
    """
    blocks = [[to_base(x) for x in r] for r in M.rows]
    b = blocks[0][0].nrows
    n = M.nrows
    rows = []
    for bi in range(n):
        for i in range(b):
            row = []
            for bj in range(n):
                row.extend(blocks[bi][bj].rows[i])
            rows.append(row)
    return RingMatrix(rows)
