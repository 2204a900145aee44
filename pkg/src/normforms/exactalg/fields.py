"""Coefficient fields: the rationals and prime fields.

Simple extensions live in :mod:`normforms.exactalg.ext`; they share the
:class:`Field` interface defined here so polynomials and matrices can be
built over any of them.
"""

from __future__ import annotations

import random
from fractions import Fraction
from numbers import Rational
from typing import Iterator


class FieldMismatch(TypeError):
    """Raised when operands live over different coefficient fields."""


class NotInvertible(ZeroDivisionError):
    """Raised when dividing by zero or a non-unit."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction."""
    text = str(text).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x):
    """Normalize an int/Fraction, returning an int when integral."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class Field:
    """Common interface of every coefficient field."""

    characteristic: int = 0
    is_finite: bool = False

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def order(self) -> int | None:
        return None

    def __call__(self, x):  # pragma: no cover - abstract
        raise NotImplementedError

    def parse(self, text):
        return self(parse_rational(text))

    def format(self, x) -> str:
        return str(x)

    def descriptor(self) -> dict:  # pragma: no cover - abstract
        raise NotImplementedError

    def random_element(self, rng: random.Random, bound: int = 5):  # pragma: no cover
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise TypeError(f"{self} is not finite")

    def contains(self, x) -> bool:
        try:
            self(x)
        except (TypeError, FieldMismatch, ValueError):
            return False
        return True

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(repr(self.descriptor()))


class Rationals(Field):
    """The field Q. Elements are plain ``int`` or ``Fraction`` values."""

    characteristic = 0

    def __call__(self, x):
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Rational):
            return as_rational(Fraction(x.numerator, x.denominator))
        if isinstance(x, str):
            return as_rational(parse_rational(x))
        if hasattr(x, "to_base"):
            return self(x.to_base(self))
        raise FieldMismatch(f"cannot coerce {x!r} into QQ")

    def format(self, x) -> str:
        return format_rational(x)

    def descriptor(self) -> dict:
        return {"kind": "rationals"}

    def random_element(self, rng, bound=5):
        return rng.randint(-bound, bound)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class ModInt:
    """Residue class modulo a prime, always stored reduced."""

    __slots__ = ("v", "field")

    def __init__(self, v: int, field: "PrimeField"):
        self.v = v % field.p
        self.field = field

    def _other(self, other):
        if isinstance(other, ModInt):
            if other.field.p != self.field.p:
                raise FieldMismatch(f"GF({self.field.p}) vs GF({other.field.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            p = self.field.p
            if other.denominator % p == 0:
                raise NotInvertible(f"denominator of {other} vanishes mod {p}")
            return other.numerator * pow(other.denominator, -1, p)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModInt(self.v + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModInt(self.v - o, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModInt(o - self.v, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModInt(self.v * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.v, self.field)

    def inverse(self) -> "ModInt":
        if self.v == 0:
            raise NotInvertible("division by zero in GF(%d)" % self.field.p)
        return ModInt(pow(self.v, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        o %= self.field.p
        if o == 0:
            raise NotInvertible("division by zero in GF(%d)" % self.field.p)
        return ModInt(self.v * pow(o, -1, self.field.p), self.field)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModInt(o, self.field) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.v, e, self.field.p), self.field)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.field.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return str(self.v)


class PrimeField(Field):
    """GF(p) for a prime p."""

    is_finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"prime-field modulus must be prime, got {p}")
        self.p = p
        self.characteristic = p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, x):
        if isinstance(x, ModInt):
            if x.field.p != self.p:
                raise FieldMismatch(f"GF({x.field.p}) element into GF({self.p})")
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return ModInt(x, self)
        if isinstance(x, (Fraction, str)):
            x = parse_rational(x) if isinstance(x, str) else x
            if x.denominator % self.p == 0:
                raise NotInvertible(f"{x} has no image in GF({self.p})")
            return ModInt(x.numerator * pow(x.denominator, -1, self.p), self)
        if hasattr(x, "to_base"):
            return self(x.to_base(self))
        raise FieldMismatch(f"cannot coerce {x!r} into GF({self.p})")

    def format(self, x) -> str:
        return str(self(x).v)

    def descriptor(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def random_element(self, rng, bound=None):
        return ModInt(rng.randrange(self.p), self)

    def elements(self):
        for v in range(self.p):
            yield ModInt(v, self)

    def __repr__(self):
        return f"GF({self.p})"


_PRIME_FIELDS: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Cached prime-field constructor."""
    if p not in _PRIME_FIELDS:
        _PRIME_FIELDS[p] = PrimeField(p)
    return _PRIME_FIELDS[p]


def field_from_descriptor(desc: dict) -> Field:
    """Inverse of :meth:`Field.descriptor`."""
    kind = desc.get("kind")
    if kind in ("rationals", "Q", "QQ"):
        return QQ
    if kind in ("prime", "prime-field"):
        return GF(int(desc["p"]))
    if kind in ("extension", "simple-extension"):
        from .ext import SimpleExt

        base = field_from_descriptor(desc["base"])
        coeffs = [base.parse(c) for c in desc["minpoly"]]
        return SimpleExt(base, coeffs, name=desc.get("generator", "alpha"))
    raise ValueError(f"unknown field descriptor {desc!r}")


def zero_of(x):
    """Additive identity in the ring containing ``x``."""
    return x * 0


def one_of(x):
    return x * 0 + 1


def inverse(x):
    """Multiplicative inverse that keeps ints exact."""
    if isinstance(x, int):
        if x == 0:
            raise NotInvertible("division by zero")
        return Fraction(1, x)
    if isinstance(x, Fraction):
        if x == 0:
            raise NotInvertible("division by zero")
        return as_rational(1 / x)
    if hasattr(x, "inverse"):
        return x.inverse()
    return 1 / x


def divide(a, b):
    """Exact quotient ``a / b`` without ever producing a float."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise NotInvertible("division by zero")
        return as_rational(Fraction(a, b))
    if isinstance(b, (int, Fraction)) and isinstance(a, (int, Fraction)):
        return as_rational(Fraction(a) / b) if b != 0 else _raise_zero()
    return a / b


def _raise_zero():
    raise NotInvertible("division by zero")
