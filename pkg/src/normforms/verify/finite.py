"""Log/antilog tables for ``GF(p^m)`` and the norm down to ``GF(p)``.

Elements are encoded as integers ``sum c_i p^i`` (``c_i`` the coefficient of
``x^i`` modulo a primitive polynomial). Nonzero elements are handled through
discrete logarithms to the root ``x``; addition of logs uses Zech logarithms.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..exactalg.ext import SimpleExt
from ..exactalg.fields import GF
from ..exactalg.irreducible import is_irreducible

ZERO = -1  # log of the zero element


def _digits(n: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _encode(digits, p: int) -> int:
    n = 0
    for d in reversed(digits):
        n = n * p + d
    return n


def _times_x(digits: list[int], tail: list[int], p: int) -> list[int]:
    """Multiply by ``x`` modulo ``x^m = sum tail[i] x^i``."""
    top = digits[-1]
    out = [0] + digits[:-1]
    if top:
        out = [(o + top * t) % p for o, t in zip(out, tail)]
    return out


def primitive_polynomial(p: int, m: int) -> list[int]:
    """First monic polynomial (lexicographic search) whose root generates ``GF(p^m)^x``."""
    if m == 1:
        from ..forms.isometry import primitive_root

        return [-primitive_root(p) % p, 1]
    F = GF(p)
    Q = p ** m
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        coeffs = list(low) + [1]
        if not is_irreducible([F(c) for c in coeffs], F):
            continue
        tail = [(-c) % p for c in low]
        cur = [1] + [0] * (m - 1)
        order = 0
        while True:
            cur = _times_x(cur, tail, p)
            order += 1
            if cur == [1] + [0] * (m - 1):
                break
        if order == Q - 1:
            return coeffs
    raise ValueError(f"no primitive polynomial of degree {m} over GF({p})")


class FiniteFieldTable:
    """``GF(p^m)`` with exp/log/Zech tables."""

    def __init__(self, p: int, m: int):
        self.p, self.m = p, m
        self.Q = p ** m
        self.order = self.Q - 1
        self.poly = primitive_polynomial(p, m)
        tail = [(-c) % p for c in self.poly[:-1]]
        exp = []
        cur = [1] + [0] * (m - 1)
        for _ in range(self.order):
            exp.append(_encode(cur, p))
            cur = _times_x(cur, tail, p) if m > 1 else [cur[0] * tail[0] % p]
        self.exp = exp
        self.log = [ZERO] * self.Q
        for k, v in enumerate(exp):
            self.log[v] = k
        self.zech = [ZERO] * self.order
        for k, v in enumerate(exp):
            d = _digits(v, p, m)
            d[0] = (d[0] + 1) % p
            self.zech[k] = self.log[_encode(d, p)]

    # log arithmetic -------------------------------------------------------------
    def add_log(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        z = self.zech[(b - a) % self.order]
        return ZERO if z == ZERO else (a + z) % self.order

    def mul_log(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % self.order

    def log_of_int(self, c: int) -> int:
        """Log of a prime-field constant (encoded as itself)."""
        return self.log[c % self.p]

    # norm ------------------------------------------------------------------------
    @property
    def norm_exponent(self) -> int:
        return self.order // (self.p - 1)

    def norm(self, x: int) -> int:
        """``N(x) = x^((p^m - 1)/(p - 1))`` as an element of ``GF(p)``."""
        k = self.log[x]
        if k == ZERO:
            return 0
        v = self.exp[k * self.norm_exponent % self.order]
        if v >= self.p:
            raise AssertionError("norm left the prime field")
        return v

    def norm_of_log(self, k: int) -> int:
        return self.exp[k * self.norm_exponent % self.order]

    # cross-check helpers -------------------------------------------------------------
    def simple_ext(self) -> SimpleExt:
        return _simple_ext(self.p, tuple(self.poly))

    def to_element(self, x: int):
        E = self.simple_ext()
        F = E.base
        return E([F(d) for d in _digits(x, self.p, self.m)])


@lru_cache(maxsize=None)
def _simple_ext(p: int, poly: tuple) -> SimpleExt:
    F = GF(p)
    return SimpleExt(F, [F(c) for c in poly], name="x", check=False)


@lru_cache(maxsize=None)
def field_table(p: int, m: int) -> FiniteFieldTable:
    return FiniteFieldTable(p, m)


def norm_map_agrees(p: int, m: int) -> bool:
    """Power map and ``det(rho(x))`` agree on every element of ``GF(p^m)``."""
    T = field_table(p, m)
    if m == 1:
        return all(T.norm(x) == x for x in range(T.Q))
    E = T.simple_ext()
    return all(int(E.norm(T.to_element(x))) == T.norm(x) for x in range(T.Q))
