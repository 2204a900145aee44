"""Dense univariate polynomials over a field, as coefficient lists.

Coefficients are stored low degree first. Every function strips trailing
zeros, so ``[]`` is the zero polynomial and ``len(f) - 1`` is the degree.
The coefficient type only needs the arithmetic operators, so the same code
runs over QQ, GF(p) and simple extensions.
"""

from __future__ import annotations

from .fields import NotInvertible, inverse


def strip(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f) -> int:
    return len(strip(f)) - 1


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] = out[i] + b
    return strip(out)


def neg(f):
    return [-c for c in f]


def sub(f, g):
    return add(f, neg(g))


def mul(f, g):
    if not f or not g:
        return []
    out = [f[0] * 0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return strip(out)


def scale(f, c):
    return strip([a * c for a in f])


def divmod_(f, g):
    """Euclidean division; ``g`` must have an invertible leading coefficient."""
    f, g = strip(f), strip(g)
    if not g:
        raise NotInvertible("polynomial division by zero")
    inv = inverse(g[-1])
    dg = len(g) - 1
    r = list(f)
    q = [g[0] * 0] * max(len(f) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv
        k = len(r) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = r[k + i] - c * b
        r.pop()
        r = strip(r)
    return strip(q), r


def rem(f, g):
    return divmod_(f, g)[1]


def monic(f):
    f = strip(f)
    if not f:
        return f
    inv = inverse(f[-1])
    return [c * inv for c in f]


def gcd(f, g):
    """Monic gcd."""
    f, g = strip(f), strip(g)
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def xgcd(f, g):
    """Return ``(h, s, t)`` with ``s*f + t*g = h`` and ``h`` monic."""
    one = (f[0] if f else g[0]) * 0 + 1
    r0, r1 = strip(f), strip(g)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    inv = inverse(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def powmod(f, e: int, m):
    one = m[-1] * 0 + 1
    result = [one]
    base = rem(f, m)
    while e > 0:
        if e & 1:
            result = rem(mul(result, base), m)
        base = rem(mul(base, base), m)
        e >>= 1
    return result


def deriv(f):
    return strip([f[i] * i for i in range(1, len(f))])


def evaluate(f, x):
    acc = None
    for c in reversed(f):
        acc = c if acc is None else acc * x + c
    return acc if acc is not None else x * 0


def compose(f, g):
    """f(g(x))."""
    out = []
    for c in reversed(strip(f)):
        out = add(mul(out, g), [c])
    return out


def is_squarefree(f) -> bool:
    return degree(gcd(f, deriv(f))) == 0
