"""Quaternion algebras ``(a, b)`` with coordinates in any commutative ring."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from ..exactalg.fields import QQ, NotInvertible, inverse
from ..exactalg.poly import SparsePoly


class NotDivisionAlgebra(ValueError):
    """Raised when an operation needs a certified division algebra."""


class Quaternion:
    """``t + x*i + y*j + z*k`` in the algebra ``A``."""

    __slots__ = ("c", "A")

    def __init__(self, coords: Sequence, A: "QuaternionAlgebra"):
        coords = tuple(coords)
        if len(coords) != 4:
            raise ValueError("a quaternion has four coordinates")
        self.c = coords
        self.A = A

    def _q(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            if other.A != self.A:
                raise ValueError("quaternions from different algebras")
            return other
        z = self.c[0] * 0
        return Quaternion((other + z, z, z, z), self.A)

    def __add__(self, other):
        o = self._q(other)
        return Quaternion([p + q for p, q in zip(self.c, o.c)], self.A)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion([-p for p in self.c], self.A)

    def __sub__(self, other):
        return self + (-self._q(other))

    def __rsub__(self, other):
        return self._q(other) - self

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion([p * other for p in self.c], self.A)
        o = self._q(other)
        a, b = self.A.a, self.A.b
        t1, x1, y1, z1 = self.c
        t2, x2, y2, z2 = o.c
        return Quaternion((
            t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2,
            t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2,
            t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
        ), self.A)

    def __rmul__(self, other):
        return Quaternion([other * p for p in self.c], self.A)

    def __pow__(self, n: int):
        out = self.A.one
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> "Quaternion":
        t, x, y, z = self.c
        return Quaternion((t, -x, -y, -z), self.A)

    def nrd(self):
        t, x, y, z = self.c
        a, b = self.A.a, self.A.b
        return t * t - a * x * x - b * y * y + a * b * z * z

    def trd(self):
        return self.c[0] * 2

    def inverse(self) -> "Quaternion":
        n = self.nrd()
        if not n:
            raise NotInvertible(f"{self} has reduced norm 0")
        return self.conj() * inverse(n)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return self * inverse(other)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def is_scalar(self) -> bool:
        return not any(self.c[1:])

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            try:
                other = self._q(other)
            except TypeError:
                return NotImplemented
        return self.A == other.A and all(p == q for p, q in zip(self.c, other.c))

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        parts = []
        for c, u in zip(self.c, ("", "i", "j", "k")):
            if not c:
                continue
            s = _fmt(c)
            if u:
                s = u if s == "1" else "-" + u if s == "-1" else f"({s})*{u}" \
                    if any(ch in s[1:] for ch in "+-") else f"{s}*{u}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _fmt(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


class QuaternionAlgebra:
    """The algebra ``(a, b)`` over ``field``: ``i^2 = a``, ``j^2 = b``, ``k = ij = -ji``.

    ``division`` records why the algebra is taken to be a division algebra:
    ``"definite"`` (both parameters negative rationals, so the norm form is
    positive definite), ``"declared"`` (asserted by the caller after a bounded
    search found no zero), or ``None`` (not certified). A norm-form zero found
    by the search makes the algebra split and division is refused.
    """

    def __init__(self, a, b, field=QQ, *, declared_division: bool = False,
                 search_height: int = 8):
        self.field = field
        self.a = field(a)
        self.b = field(b)
        if not self.a or not self.b:
            raise ValueError("quaternion parameters must be nonzero")
        self.search_height = search_height
        self.zero_found = None
        self.division = self._certify(declared_division)

    def _certify(self, declared: bool) -> str | None:
        if self.field is QQ and self.a < 0 and self.b < 0:
            return "definite"
        if self.field is QQ:
            self.zero_found = norm_form_zero(self.a, self.b, self.search_height)
            if self.zero_found is not None:
                return None
        return "declared" if declared else None

    @property
    def is_division(self) -> bool:
        return self.division is not None

    def require_division(self):
        if not self.is_division:
            why = f"norm form zero {self.zero_found}" if self.zero_found else "no certificate"
            raise NotDivisionAlgebra(f"({self.a}, {self.b}) not certified division: {why}")

    def __call__(self, coords) -> Quaternion:
        if isinstance(coords, Quaternion):
            return coords
        if isinstance(coords, (list, tuple)):
            return Quaternion([self.field(c) if not _is_ring_elem(c) else c for c in coords],
                              self)
        return self.scalar(coords)

    def scalar(self, t) -> Quaternion:
        z = t * 0
        return Quaternion((t, z, z, z), self)

    @property
    def one(self) -> Quaternion:
        return self.scalar(self.field.one)

    @property
    def zero(self) -> Quaternion:
        return self.scalar(self.field.zero)

    @property
    def basis(self) -> list[Quaternion]:
        z, o = self.field.zero, self.field.one
        return [Quaternion(c, self) for c in ((o, z, z, z), (z, o, z, z), (z, z, o, z),
                                             (z, z, z, o))]

    def over(self, ring_values: Sequence) -> Quaternion:
        """Quaternion with coordinates in a ring above the base (e.g. ``A (x) K``)."""
        return Quaternion(ring_values, self)

    def generic(self, prefix: str = "q", names=None) -> Quaternion:
        names = names or [f"{prefix}{k}" for k in range(1, 5)]
        return Quaternion(SparsePoly.gens(names, self.field), self)

    def random(self, rng, bound: int = 5) -> Quaternion:
        return Quaternion([self.field(rng.randint(-bound, bound)) for _ in range(4)], self)

    def nrd_form(self):
        """Coefficients of the diagonal norm form ``<1, -a, -b, ab>``."""
        return [self.field.one, -self.a, -self.b, self.a * self.b]

    def __eq__(self, other):
        return isinstance(other, QuaternionAlgebra) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QuaternionAlgebra({_fmt(self.a)}, {_fmt(self.b)})"


def _is_ring_elem(c) -> bool:
    return not isinstance(c, (int, Fraction, str))


def norm_form_zero(a, b, height: int):
    """Nonzero integer zero of ``t^2 - a x^2 - b y^2 + ab z^2`` with entries ``<= height``.

    Rational parameters are cleared to integers first; returns ``None`` when
    none exists in the box (which is not a proof of anisotropy).
    """
    a, b = Fraction(a), Fraction(b)
    rng = range(-height, height + 1)
    for x, y, z in itertools.product(rng, repeat=3):
        r = a * x * x + b * y * y - a * b * z * z
        if r < 0:
            continue
        num, den = r.numerator, r.denominator
        # t^2 = r needs r a rational square
        sn, sd = _isqrt(num), _isqrt(den)
        if sn is None or sd is None:
            continue
        t = Fraction(sn, sd)
        t = t.numerator if t.denominator == 1 else t
        if (t, x, y, z) != (0, 0, 0, 0) and abs(t) <= height:
            return (t, x, y, z)
    return None


def _isqrt(n: int):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def quat_arith(p: Quaternion, q, op: str) -> Quaternion:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "conj":
        return p.conj()
    if op == "inv":
        return p.inverse()
    raise ValueError(f"unknown operation {op!r}")


def nrd(q: Quaternion):
    return q.nrd()


def split_embedding(q: Quaternion):
    """2x2 matrix of ``q`` in ``(1, b)`` via ``i = diag(1,-1)``, ``j = [[0,b],[1,0]]``."""
    if q.A.a != 1:
        raise ValueError("the matrix embedding needs a = 1")
    t, x, y, z = q.c
    b = q.A.b
    return [[t + x, b * (y + z)], [y - z, t - x]]
