"""Quotient rings R[x]/(m(x)) and simple field extensions F[x]/(m(x)).

:class:`QuotientRing` only needs a monic modulus whose coefficients
support ring arithmetic, so it serves symbolic work too: ``Q[e][s]/(s^2-e)``
with a polynomial parameter ``e`` is a quotient ring over polynomials.
:class:`SimpleExt` adds the field layer (irreducibility on construction,
inverses, enumeration over finite bases).

Elements are :class:`QElem` values holding coordinates in the power basis
``1, a, ..., a^(d-1)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from . import upoly
from .fields import Field, FieldMismatch, ModInt, NotInvertible, inverse
from .poly import SparsePoly


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, ModInt, SparsePoly))


class QElem:
    """Element of a :class:`QuotientRing`, stored by power-basis coordinates."""

    __slots__ = ("coords", "ring")

    def __init__(self, coords, ring: "QuotientRing"):
        self.coords = tuple(coords)
        self.ring = ring

    def _coerce(self, other):
        if isinstance(other, QElem):
            if other.ring is self.ring:
                return other
            if self.ring.is_above(other.ring):
                return self.ring.embed(other)
            if other.ring.is_above(self.ring):
                return None
            if other.ring == self.ring:
                return QElem(other.coords, self.ring)
            raise FieldMismatch(f"{other.ring!r} element used in {self.ring!r}")
        if _is_scalar(other):
            return self.ring.embed(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElem([a + b for a, b in zip(self.coords, o.coords)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return QElem([-a for a in self.coords], self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElem([a - b for a, b in zip(self.coords, o.coords)], self.ring)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, QElem):
            if other.ring is self.ring:
                return self.ring.mul(self, other)
            if self.ring.is_above(other.ring):
                return QElem([a * other for a in self.coords], self.ring)
            if other.ring.is_above(self.ring):
                return NotImplemented
            if other.ring == self.ring:
                return self.ring.mul(self, QElem(other.coords, self.ring))
            raise FieldMismatch(f"{other.ring!r} element used in {self.ring!r}")
        if _is_scalar(other):
            return QElem([a * other for a in self.coords], self.ring)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "QElem":
        return self.ring.inverse(self)

    def __truediv__(self, other):
        if isinstance(other, QElem):
            o = self._coerce(other)
            if o is None:
                return NotImplemented
            return self * o.inverse()
        return QElem([a * inverse(other) for a in self.coords], self.ring)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, o.coords))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def to_base(self, target):
        if any(bool(c) for c in self.coords[1:]):
            raise FieldMismatch(f"{self} does not lie in the base")
        return target(self.coords[0])

    def in_base(self) -> bool:
        return not any(bool(c) for c in self.coords[1:])

    def __repr__(self):
        return self.ring.format(self)


class QuotientRing:
    """The ring ``R[x]/(m(x))`` for a monic modulus ``m`` (low degree first)."""

    def __init__(self, minpoly: Sequence, name: str = "alpha", base=None):
        minpoly = list(minpoly)
        if len(minpoly) < 2:
            raise ValueError("modulus must have degree at least 1")
        if not minpoly[-1] == 1:
            raise ValueError("modulus must be monic")
        self.modulus = minpoly
        self.degree = len(minpoly) - 1
        self.name = name
        self.base = base
        self._tail = [-c for c in minpoly[:-1]]
        self._zero = minpoly[0] * 0
        if base is not None and hasattr(base, "zero"):
            self._zero = base.zero

    # coordinate ring helpers -------------------------------------------
    @property
    def zero(self) -> QElem:
        return QElem([self._zero] * self.degree, self)

    @property
    def one(self) -> QElem:
        return self.embed(self._zero + 1)

    @property
    def gen(self) -> QElem:
        c = [self._zero] * self.degree
        if self.degree == 1:
            return QElem([self._tail[0]], self)
        c[1] = self._zero + 1
        return QElem(c, self)

    def is_above(self, other) -> bool:
        b = self.base
        while isinstance(b, QuotientRing):
            if b is other or b == other:
                return True
            b = b.base
        return False

    def embed(self, x) -> QElem:
        if isinstance(x, QElem) and x.ring is self:
            return x
        if isinstance(self.base, QuotientRing):
            x = self.base(x)
        return QElem([x] + [self._zero] * (self.degree - 1), self)

    def element(self, coords) -> QElem:
        coords = list(coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return QElem(coords, self)

    def __call__(self, x) -> QElem:
        if isinstance(x, (list, tuple)):
            return self.element(x)
        if isinstance(x, QElem):
            if x.ring is self:
                return x
            if self.is_above(x.ring):
                return self.embed(x)
            if x.ring == self:
                return QElem(x.coords, self)
            raise FieldMismatch(f"cannot coerce {x!r} into {self!r}")
        return self.embed(x)

    # arithmetic ----------------------------------------------------------
    def mul(self, a: QElem, b: QElem) -> QElem:
        d = self.degree
        prod = [None] * (2 * d - 1)
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if not y:
                    continue
                t = x * y
                prod[i + j] = t if prod[i + j] is None else prod[i + j] + t
        tail = self._tail
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c is None or not c:
                continue
            for i, t in enumerate(tail):
                if not t:
                    continue
                v = c * t
                prod[k - d + i] = v if prod[k - d + i] is None else prod[k - d + i] + v
        z = self._zero
        return QElem([z if c is None else c for c in prod[:d]], self)

    def inverse(self, a: QElem) -> QElem:
        raise NotInvertible(f"{self!r} is not a field")

    def gen_power(self, k: int) -> QElem:
        return self.gen ** k if k else self.one

    def regular_rep(self, a: QElem):
        """Matrix of multiplication by ``a`` in the power basis (column j = a*x^j)."""
        from .matrix import RingMatrix

        a = self(a)
        cols = []
        cur = a
        g = self.gen
        for j in range(self.degree):
            cols.append(list(cur.coords))
            if j + 1 < self.degree:
                cur = cur * g
        rows = [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]
        return RingMatrix(rows)

    def norm(self, a):
        """Determinant of the regular representation."""
        return self.regular_rep(a).det()

    def trace(self, a):
        return self.regular_rep(a).trace()

    def apply_generator_map(self, a: QElem, image: QElem) -> QElem:
        """Ring map fixing the base and sending the generator to ``image``."""
        result = self.zero
        power = self.one
        for k, c in enumerate(a.coords):
            if k:
                power = power * image
            if c:
                result = result + power * c
        return result

    def conj(self, a: QElem) -> QElem:
        """Nontrivial automorphism of a quadratic ring ``x^2 - e``: x -> -x."""
        if self.degree != 2 or self.modulus[1]:
            raise ValueError("conj needs a modulus of the form x^2 - e")
        return QElem([a.coords[0], -a.coords[1]], self)

    def format(self, a: QElem) -> str:
        parts = []
        for k, c in reversed(list(enumerate(a.coords))):
            if not c:
                continue
            cs = _fmt(c, getattr(self, "base", None))
            mono = "" if k == 0 else (self.name if k == 1 else f"{self.name}^{k}")
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                if not _atomic(cs):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return f"QuotientRing(deg={self.degree}, {self.name})"


def _fmt(c, base) -> str:
    if isinstance(base, Field):
        return base.format(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)
    return str(c)


def _atomic(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return all(ch.isalnum() or ch in "/_" for ch in body)


class SimpleExt(Field, QuotientRing):
    """Simple field extension ``base[x]/(minpoly)``.

    ``minpoly`` is given low degree first and must be monic, of degree at
    least 2 and irreducible over ``base`` (checked unless ``check=False``).

    >>> E = SimpleExt(QQ, [-2, 0, 0, 1], name="a")
    >>> a = E.gen
    >>> a * a**2
    2
    """

    def __init__(self, base: Field, minpoly: Sequence, name: str = "alpha", check: bool = True):
        coeffs = [base(c) for c in minpoly]
        if len(coeffs) < 3:
            raise ValueError("extension minpoly must have degree at least 2")
        if not coeffs[-1] == 1:
            raise ValueError("extension minpoly must be monic")
        QuotientRing.__init__(self, coeffs, name=name, base=base)
        self.characteristic = base.characteristic
        self.is_finite = base.is_finite
        self._descriptor = None
        if check:
            from .irreducible import is_irreducible

            if not is_irreducible(coeffs, base):
                raise ValueError(f"minpoly {self._minpoly_str()} is reducible over {base!r}")

    def _minpoly_str(self) -> str:
        from .poly import SparsePoly

        return str(SparsePoly.from_univariate(self.modulus, "x", self.base))

    @property
    def order(self):
        return self.base.order ** self.degree if self.is_finite else None

    @property
    def absolute_degree(self) -> int:
        b = self.base
        return self.degree * (b.absolute_degree if isinstance(b, SimpleExt) else 1)

    def prime_field(self) -> Field:
        b = self.base
        while isinstance(b, SimpleExt):
            b = b.base
        return b

    def __call__(self, x) -> QElem:
        if isinstance(x, QElem):
            if x.ring is self:
                return x
            if x.ring == self:
                return QElem(x.coords, self)
            if self.is_above(x.ring):
                return self.embed(x)
            if isinstance(x.ring, QuotientRing) and x.ring.is_above(self):
                return x.to_base(self)
            raise FieldMismatch(f"cannot coerce {x!r} into {self!r}")
        if isinstance(x, (list, tuple)):
            return QElem([self.base(c) for c in x], self) if len(x) == self.degree else \
                self._bad(x)
        if isinstance(x, str):
            return self.parse(x)
        return self.embed(self.base(x))

    def _bad(self, x):
        raise ValueError(f"expected {self.degree} coordinates, got {x!r}")

    def embed(self, x) -> QElem:
        if isinstance(x, QElem) and x.ring is self:
            return x
        return QElem([self.base(x)] + [self.base.zero] * (self.degree - 1), self)

    def parse(self, text):
        if isinstance(text, (list, tuple)):
            return self([self.base.parse(t) for t in text])
        text = str(text).strip()
        if text.startswith("["):
            import json

            return self.parse(json.loads(text))
        return self.embed(self.base.parse(text))

    def format(self, x) -> str:
        return QuotientRing.format(self, self(x))

    def serialize(self, x):
        """Coordinate list of strings, nested for towers."""
        out = []
        for c in self(x).coords:
            if isinstance(self.base, SimpleExt):
                out.append(self.base.serialize(c))
            else:
                out.append(self.base.format(c))
        return out

    def descriptor(self) -> dict:
        if self._descriptor is None:
            self._descriptor = {
                "kind": "extension",
                "base": self.base.descriptor(),
                "minpoly": [self.base.format(c) if not isinstance(self.base, SimpleExt)
                            else self.base.serialize(c) for c in self.modulus],
                "generator": self.name,
            }
        return self._descriptor

    def inverse(self, a: QElem) -> QElem:
        a = self(a)
        f = upoly.strip(list(a.coords))
        if not f:
            raise NotInvertible("division by zero in extension field")
        h, s, _ = upoly.xgcd(f, self.modulus)
        if len(h) != 1:
            raise NotInvertible(f"{a!r} is not invertible")
        s = list(s) + [self.base.zero] * (self.degree - len(s))
        return QElem(s[: self.degree], self)

    def random_element(self, rng, bound=5):
        return QElem([self.base.random_element(rng, bound) for _ in range(self.degree)], self)

    def elements(self):
        base_elems = list(self.base.elements())
        for coords in itertools.product(base_elems, repeat=self.degree):
            yield QElem(coords, self)

    def minpoly_of(self, a) -> list:
        """Minimal polynomial of ``a`` over the base field (low degree first)."""
        from .matrix import RingMatrix

        a = self(a)
        vecs = []
        power = self.one
        for k in range(self.degree + 1):
            vecs.append(list(power.coords))
            M = RingMatrix([[v[i] for v in vecs] for i in range(self.degree)])
            null = M.nullspace()
            if null:
                rel = null[0]
                lead = rel[-1]
                return [self.base(c * inverse(lead)) for c in rel]
            power = power * a
        raise AssertionError("unreachable: Cayley-Hamilton bounds the degree")

    def __eq__(self, other):
        return Field.__eq__(self, other)

    def __hash__(self):
        return Field.__hash__(self)

    def __repr__(self):
        return f"{self.base!r}({self.name}: {self._minpoly_str()} = 0)"


def ext_arith(E: QuotientRing, a, b, op: str):
    """``add``/``sub``/``mul``/``div`` on extension elements."""
    a, b = E(a), E(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def quadratic_ring(e, name: str = "s") -> QuotientRing:
    """``R[s]/(s^2 - e)`` for a ring element ``e`` (a polynomial or scalar)."""
    return QuotientRing([-e, e * 0, e * 0 + 1], name=name)
