"""Regular representations, norms and norm forms of simple extensions.

An "extension" here is either a concrete :class:`SimpleExt` or a symbolic
:class:`QuotientRing` whose modulus has polynomial coefficients (for
instance ``x^3 - c`` with ``c`` a free parameter). Norm forms are
determinants of regular representations computed over a polynomial ring.
"""

from __future__ import annotations

from typing import Sequence

from ..exactalg.ext import QElem, QuotientRing, SimpleExt
from ..exactalg.fields import QQ, Field
from ..exactalg.matrix import RingMatrix
from ..exactalg.poly import SparsePoly
from ..forms.algebra import AlgebraStructure
from ..forms.form import Form


def regular_rep(E: QuotientRing, a) -> RingMatrix:
    return E.regular_rep(a)


def norm(E: QuotientRing, a):
    """``N_{E/base}(a) = det(rho(a))``."""
    return E.regular_rep(a).det()


def absolute_norm(K: SimpleExt, a):
    """Norm down to the prime field through a tower, one step at a time."""
    while isinstance(K, SimpleExt):
        a = K.norm(a)
        K = K.base
    return a


def symbolic_extension(modulus: Sequence, name: str = "alpha") -> QuotientRing:
    """``Q[params][x]/(modulus)`` for a monic modulus with polynomial coefficients."""
    coeffs = [c if isinstance(c, SparsePoly) else SparsePoly.const(c) for c in modulus]
    return QuotientRing(coeffs, name=name)


def kummer_extension(d: int, c="c", b=None, name: str = "alpha") -> QuotientRing:
    """``x^d - b*x - c`` with ``b``/``c`` given as names (symbolic) or numbers."""
    cv = SparsePoly.var(c, (c,)) if isinstance(c, str) else SparsePoly.const(c)
    coeffs = [-cv] + [SparsePoly.const(0)] * (d - 1) + [SparsePoly.const(1)]
    if b is not None:
        bv = SparsePoly.var(b, (b,)) if isinstance(b, str) else SparsePoly.const(b)
        coeffs[1] = -bv
    return QuotientRing(coeffs, name=name)


def extension_params(E: QuotientRing) -> tuple[str, ...]:
    """Free parameters appearing in a symbolic modulus (empty for ``SimpleExt``)."""
    if isinstance(E, SimpleExt):
        return ()
    names: list[str] = []
    for c in E.modulus:
        if isinstance(c, SparsePoly):
            for v in c.used_vars():
                if v not in names:
                    names.append(v)
    return tuple(names)


def coefficient_field(E: QuotientRing) -> Field:
    if isinstance(E, SimpleExt):
        return E.base
    for c in E.modulus:
        if isinstance(c, SparsePoly):
            return c.field
    return QQ


def polynomial_lift(E: QuotientRing, names: Sequence[str]) -> QuotientRing:
    """Copy of ``E`` over the polynomial ring in ``names`` (plus its parameters)."""
    F = coefficient_field(E)
    names = tuple(names)
    mod = []
    for c in E.modulus:
        if isinstance(c, SparsePoly):
            mod.append(c.with_vars(names + tuple(v for v in c.vars if v not in names)))
        else:
            mod.append(SparsePoly.const(c, names, F))
    return QuotientRing(mod, name=E.name)


def lift_element(R: QuotientRing, a, F: Field) -> QElem:
    """Move an element of ``E`` (or a base scalar) into its polynomial lift ``R``."""
    if isinstance(a, QElem):
        return QElem([c if isinstance(c, SparsePoly) else SparsePoly.const(c, (), F)
                      for c in a.coords], R)
    if not isinstance(a, SparsePoly):
        a = SparsePoly.const(a, (), F)
    return R.embed(a)


def norm_form(E: QuotientRing, names: Sequence[str] | None = None, prefix: str = "z") -> Form:
    """``det(sum_i x_i rho(alpha^(i-1)))`` as a form of degree ``[E:F]``."""
    d = E.degree
    names = tuple(names) if names else tuple(f"{prefix}{i}" for i in range(1, d + 1))
    if len(names) != d:
        raise ValueError(f"need {d} variable names")
    F = coefficient_field(E)
    params = extension_params(E)
    R = polynomial_lift(E, names + params)
    gens = [SparsePoly.var(n, names + params, F) for n in names]
    N = R.regular_rep(QElem(gens, R)).det()
    origin = {"kind": "field-norm", "degree": d,
              "minpoly": [str(c) if not hasattr(F, "serialize") else F.serialize(c)
                          for c in E.modulus]}
    return Form(N, d, names, params, AlgebraStructure.from_extension(E), origin)


def transfer_form(E: QuotientRing, phi0: Form, blocks: Sequence[str] | None = None) -> Form:
    """``N_{E/F}(phi0)``: substitute a basis expansion for each variable, take the norm.

    Variable ``j`` of ``phi0`` becomes ``sum_k blocks[k]{j} * alpha^k``; the
    new variables are ordered ``blocks[0]1, blocks[1]1, ..., blocks[0]2, ...``.
    """
    d = E.degree
    if blocks is None:
        blocks = {2: ("u", "w"), 3: ("u", "v", "w")}.get(d) or \
            tuple(f"y{k}_" for k in range(d))
    blocks = tuple(blocks)
    if len(blocks) != d:
        raise ValueError(f"need {d} block prefixes")
    F = coefficient_field(E)
    new = tuple(f"{blocks[k]}{j + 1}" for j in range(phi0.dim) for k in range(d))
    params = phi0.params + tuple(p for p in extension_params(E) if p not in phi0.params)
    clash = set(new) & set(params)
    if clash:
        raise ValueError(f"fresh variable names collide with parameters: {sorted(clash)}")
    R = polynomial_lift(E, new + params)
    values = []
    for j in range(phi0.dim):
        coords = [SparsePoly.var(f"{blocks[k]}{j + 1}", new + params, F) for k in range(d)]
        values.append(QElem(coords, R))
    for p in phi0.params:
        values.append(R.embed(SparsePoly.var(p, new + params, F)))
    W = _evaluate_in_ring(phi0.poly, values, R, F)
    N = R.regular_rep(W).det()
    return Form(N, phi0.degree * d, new, params, None,
                {"kind": "transfer", "extension_degree": d, "base": phi0.origin})


def _evaluate_in_ring(poly: SparsePoly, values, R: QuotientRing, F: Field) -> QElem:
    acc = R.zero
    cache: dict = {}
    for e, c in poly.terms.items():
        term = lift_element(R, c, F)
        for i, k in enumerate(e):
            if k:
                pw = cache.get((i, k))
                if pw is None:
                    pw = values[i] ** k
                    cache[(i, k)] = pw
                term = term * pw
        acc = acc + term
    return acc


def multiplication_table(E: QuotientRing) -> AlgebraStructure:
    return AlgebraStructure.from_extension(E)
