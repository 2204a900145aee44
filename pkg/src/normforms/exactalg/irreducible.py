"""Irreducibility of univariate polynomials over QQ, GF(q) and number fields.

Over a finite field of order q we use Ben-Or's test. Over QQ the rational
root test settles degree <= 3; beyond that, degree patterns of the
distinct-degree factorization modulo several primes bound the possible
factor degrees, and Kronecker's interpolation search decides whatever the
patterns leave open. Over a characteristic-0 simple extension K we shift
the polynomial until its norm down to the base is squarefree; the
polynomial is then irreducible over K exactly when that norm is
irreducible over the base.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import upoly
from .fields import GF, QQ, Rationals, is_prime


def is_irreducible(coeffs, base=QQ) -> bool:
    """Whether ``coeffs`` (low degree first) is irreducible over ``base``."""
    f = upoly.strip([base(c) for c in coeffs])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if base.is_finite:
        return _ben_or(f, base.order)
    if isinstance(base, Rationals):
        return _irreducible_qq(f)
    from .ext import SimpleExt

    if isinstance(base, SimpleExt):
        return _irreducible_ext(f, base)
    raise TypeError(f"no irreducibility test over {base!r}")


# -- finite fields -----------------------------------------------------------

def _ben_or(f, q: int) -> bool:
    x = [f[0] * 0, f[0] * 0 + 1]
    h = x
    for _ in range(1, (len(f) - 1) // 2 + 1):
        h = upoly.powmod(h, q, f)
        g = upoly.gcd(upoly.sub(h, x), f)
        if len(g) > 1:
            return False
    return True


def ddf_degrees(f) -> list[int]:
    """Degrees of the irreducible factors of a squarefree ``f`` over GF(p)."""
    p = f[0].field.p
    f = upoly.monic(f)
    x = [f[0] * 0, f[0] * 0 + 1]
    h = x
    out = []
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = upoly.powmod(h, p, f)
        g = upoly.gcd(upoly.sub(h, x), f)
        if len(g) > 1:
            out.extend([i] * ((len(g) - 1) // i))
            f = upoly.divmod_(f, g)[0]
            h = upoly.rem(h, f)
    if len(f) > 1:
        out.append(len(f) - 1)
    return out


# -- rationals ---------------------------------------------------------------

def _primitive_int(f) -> list[int]:
    den = math.lcm(*(Fraction(c).denominator for c in f))
    ints = [int(Fraction(c) * den) for c in f]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _has_rational_root(f: list[int]) -> bool:
    if f[0] == 0:
        return True
    for p in _divisors(f[0]):
        for q in _divisors(f[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if upoly.evaluate(f, r) == 0:
                    return True
    return False


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _modular_factor_degrees(f: list[int], primes: int = 25) -> set[int]:
    """Factor degrees in [1, n-1] not ruled out by any modular pattern."""
    n = len(f) - 1
    possible = set(range(1, n))
    used = 0
    p = 2
    while used < primes and possible:
        p += 1
        if not is_prime(p) or f[-1] % p == 0:
            continue
        F = GF(p)
        fp = upoly.strip([F(c) for c in f])
        if not upoly.is_squarefree(fp):
            continue
        used += 1
        possible &= _subset_sums(ddf_degrees(fp))
    return possible


def _interpolate(xs, ys):
    """Lagrange interpolation with exact rational coefficients."""
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = [Fraction(yi)]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                term = upoly.mul(term, [-xj, 1])
                denom *= xi - xj
        out = upoly.add(out, upoly.scale(term, Fraction(1, denom)))
    return out


def _kronecker_factor(f: list[int], k: int):
    """A factor of degree ``k`` of the integer polynomial ``f``, or ``None``."""
    pts = sorted((x for x in range(-12, 13) if upoly.evaluate(f, x) != 0),
                 key=lambda x: (len(_divisors(upoly.evaluate(f, x))), abs(x)))[: k + 1]
    choices = []
    for i, x in enumerate(pts):
        ds = _divisors(upoly.evaluate(f, x))
        choices.append(ds if i == 0 else ds + [-d for d in ds])
    for ys in itertools.product(*choices):
        g = _interpolate(pts, ys)
        if len(g) - 1 != k or any(Fraction(c).denominator != 1 for c in g):
            continue
        q, r = upoly.divmod_(f, g)
        if not r and all(Fraction(c).denominator == 1 for c in q):
            return g
    return None


def _irreducible_qq(f) -> bool:
    f = _primitive_int(f)
    n = len(f) - 1
    if _has_rational_root(f):
        return False
    if n <= 3:
        return True
    if not upoly.is_squarefree(f):
        return False
    possible = _modular_factor_degrees(f)
    for k in sorted(d for d in possible if d <= n // 2):
        if _kronecker_factor(f, k) is not None:
            return False
    return True


# -- number fields -----------------------------------------------------------

def norm_poly(g, K) -> list:
    """Norm of ``g`` in ``K[x]`` down to ``K.base[x]`` (low degree first).

    Equals the resultant in the generator of the minimal polynomial and
    ``g``; computed as a determinant of the regular representation over the
    polynomial ring ``K.base[x]``.
    """
    from .ext import QElem, QuotientRing
    from .poly import SparsePoly

    F = K.base
    xs = ("x",)
    ring = QuotientRing([SparsePoly.const(c, xs, F) for c in K.modulus], name=K.name)
    coords = []
    for i in range(K.degree):
        terms = {(j,): K(c).coords[i] for j, c in enumerate(g)}
        coords.append(SparsePoly(xs, terms, F))
    det = ring.regular_rep(QElem(coords, ring)).det()
    return upoly.strip(det.univariate_coeffs("x"))


def _irreducible_ext(f, K) -> bool:
    if not upoly.is_squarefree(f):
        return False
    theta = K.gen
    for k in itertools.chain([0], *((s, -s) for s in range(1, 50))):
        g = upoly.compose(f, [-theta * k, K.one]) if k else f
        N = norm_poly(g, K)
        if upoly.is_squarefree(N):
            return is_irreducible(N, K.base)
    raise RuntimeError("no squarefree norm found after 100 shifts")
