"""Norm transitivity through the compositum ``K(alpha)`` on concrete instances.

For ``F = Q``, a simple extension ``F(alpha)`` and a field ``K`` linearly
disjoint from it, an element ``z`` of ``K(alpha)`` has two norms down to ``F``:

* going through ``K``:  ``N_{K/F}(N_{K(alpha)/K}(z))``, the left side;
* going through ``F(alpha)``: ``a = N_{K(alpha)/F(alpha)}(z)`` written as
  ``sum a_i alpha^(i-1)``, then the norm form of ``F(alpha)/F`` at ``(a_i)``.

The two towers are built separately (``alpha`` over ``K`` versus ``K``'s
generator over ``F(alpha)``), so the check is not circular.
"""

from __future__ import annotations

from typing import Sequence

from ..exactalg.ext import QElem, SimpleExt
from ..exactalg.fields import QQ
from ..exactalg.irreducible import is_irreducible
from ..report import VerifyReport
from .norms import norm_form

ANCHORS = ["norm of a norm form value through a linearly disjoint extension"]


class NotLinearlyDisjoint(ValueError):
    """The minimal polynomial of ``alpha`` factors over ``K``."""


def compositum(minpoly: Sequence, K: SimpleExt, name: str = "alpha") -> SimpleExt:
    """``K(alpha)``; raises :class:`NotLinearlyDisjoint` when the degree drops."""
    coeffs = [K(QQ(c)) for c in minpoly]
    if not is_irreducible(coeffs, K):
        raise NotLinearlyDisjoint(
            f"minimal polynomial {[str(c) for c in minpoly]} is reducible over {K!r}")
    return SimpleExt(K, coeffs, name=name, check=False)


def _coords(z, K: SimpleExt, d: int) -> list[list]:
    """``z`` as a ``d x [K:Q]`` rational table (row i = coordinates of z_i in K)."""
    if isinstance(z, QElem):
        z = z.coords
    rows = [list(K(c).coords) if not isinstance(c, (list, tuple)) else [QQ(x) for x in c]
            for c in z]
    if len(rows) != d or any(len(r) != K.degree for r in rows):
        raise ValueError(f"expected {d} coordinates, each with {K.degree} rationals")
    return rows


def verify_transitivity_instance(minpoly: Sequence, K: SimpleExt, z) -> VerifyReport:
    """Exact check of both norm routes for one ``z`` in ``K(alpha)``."""
    d = len(minpoly) - 1
    rows = _coords(z, K, d)
    if all(x == 0 for r in rows for x in r):
        raise ValueError("z must be nonzero")
    L = compositum(minpoly, K)
    zL = L([K(r) for r in rows])
    lhs = K.norm(L.norm(zL))

    E = SimpleExt(QQ, minpoly, name="alpha", check=False)
    M = SimpleExt(E, list(K.modulus), name="beta", check=False)
    zM = M([E([rows[i][j] for i in range(d)]) for j in range(K.degree)])
    a = list(M.norm(zM).coords)
    rhs = norm_form(E).evaluate(a)

    rep = VerifyReport("norm-transitivity", "exact", lhs == rhs, ANCHORS,
                       {"minpoly": [QQ.format(QQ(c)) for c in minpoly],
                        "K": K.descriptor(), "z": rows},
                       {"a": a, "lhs": lhs, "rhs": rhs})
    return rep


def random_instance(minpoly: Sequence, K: SimpleExt, rng, bound: int = 5) -> list[list]:
    d = len(minpoly) - 1
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(K.degree)] for _ in range(d)]
        if any(x for r in rows for x in r):
            return rows
