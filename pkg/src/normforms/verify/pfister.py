"""Transfers of quadratic Pfister forms through quadratic and cubic Kummer extensions.

Ground truth is definitional: the product of the Galois conjugates of
``phi0(z)`` with ``z = u + w*s`` (``s^2 = c``) or ``z = u + v*t + w*t^2``
(``t^3 = c``, conjugates ``t -> omega^k t`` in a ring containing a primitive
cube root of unity). It is cross-checked against the determinant-based
``transfer_form``. Closed-form displays are then treated as hypotheses and
compared under every combination of the unstated conventions.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from ..exactalg.ext import QuotientRing, quadratic_ring
from ..exactalg.fields import QQ
from ..exactalg.identity import identity_test
from ..exactalg.poly import SparsePoly
from ..extfields.norms import kummer_extension, transfer_form
from ..forms.form import Form
from ..report import VerifyReport

SIGNS = ("minus", "plus")
LAYOUTS = ("block", "interleaved")
PAIRINGS = ("product-argument", "bilinear-square")
INTERPRETATIONS = ("cube-of-quadratic-value", "cube-with-linear-products", "cubic-diagonal")


def _scalar(x) -> SparsePoly:
    if isinstance(x, SparsePoly):
        return x
    if isinstance(x, str):
        return SparsePoly.var(x, (x,))
    return SparsePoly.const(QQ(x))


def _params(a_list, c) -> tuple[str, ...]:
    names = [a for a in a_list if isinstance(a, str)]
    if isinstance(c, str):
        names.append(c)
    return tuple(names)


def pfister_coefficients(a_list: Sequence, sign: str = "minus") -> list[SparsePoly]:
    """Diagonal of ``<<a_1, ..., a_r>>``.

    Entry ``j`` is the product of ``(+-a_i)`` over the set bits ``i`` of ``j``.
    """
    if sign not in SIGNS:
        raise ValueError(f"sign must be one of {SIGNS}")
    s = -1 if sign == "minus" else 1
    factors = [_scalar(a) * s for a in a_list]
    out = []
    for j in range(2 ** len(factors)):
        coef = SparsePoly.const(1)
        for i, f in enumerate(factors):
            if j >> i & 1:
                coef = coef * f
        out.append(coef)
    return out


def pfister_form(a_list: Sequence, sign: str = "minus", prefix: str = "x") -> Form:
    coefs = pfister_coefficients(a_list, sign)
    names = tuple(f"{prefix}{j}" for j in range(1, len(coefs) + 1))
    params = tuple(a for a in a_list if isinstance(a, str))
    poly = SparsePoly.const(0)
    for coef, n in zip(coefs, names):
        x = SparsePoly.var(n, (n,))
        poly = poly + coef * x * x
    return Form(poly, 2, names, params,
                origin={"kind": "pfister", "sign": sign, "a": [str(a) for a in a_list]})


def _gens(prefix: str, n: int) -> list[SparsePoly]:
    return [SparsePoly.var(f"{prefix}{j}", (f"{prefix}{j}",)) for j in range(1, n + 1)]


# -- quartic ---------------------------------------------------------------------------

def quartic_oracle(a_list: Sequence, c="c", sign: str = "minus") -> Form:
    """``phi0(u + w s) * phi0(u - w s)`` with ``s^2 = c``."""
    coefs = pfister_coefficients(a_list, sign)
    n = len(coefs)
    cp = _scalar(c)
    K = quadratic_ring(cp, "s")
    u, w = _gens("u", n), _gens("w", n)
    val = K.zero
    for coef, uj, wj in zip(coefs, u, w):
        z = K.element([uj, wj])
        val = val + z * z * coef
    prod = val * K.conj(val)
    if prod.coords[1]:
        raise AssertionError("conjugate product is not fixed by s -> -s")
    names = tuple(f"{b}{j}" for j in range(1, n + 1) for b in "uw")
    return Form(prod.coords[0], 4, names, _params(a_list, c),
                origin={"kind": "transfer-oracle", "extension_degree": 2})


def quartic_formula(a_list: Sequence, c="c", sign: str = "minus", layout: str = "block",
                    pairing: str = "product-argument") -> SparsePoly:
    """``<<a, c>>(args)^2 - 4c * phi0(u_j w_j)`` under one reading of the conventions."""
    if layout not in LAYOUTS or pairing not in PAIRINGS:
        raise ValueError("unknown layout or pairing")
    big = pfister_coefficients(list(a_list) + [c], sign)
    small = pfister_coefficients(a_list, sign)
    n = len(small)
    u, w = _gens("u", n), _gens("w", n)
    args = u + w if layout == "block" else [x for pair in zip(u, w) for x in pair]
    q = SparsePoly.const(0)
    for coef, x in zip(big, args):
        q = q + coef * x * x
    if pairing == "product-argument":
        second = SparsePoly.const(0)
        for coef, uj, wj in zip(small, u, w):
            second = second + coef * (uj * wj) ** 2
    else:
        b = SparsePoly.const(0)
        for coef, uj, wj in zip(small, u, w):
            b = b + coef * uj * wj
        second = b * b
    return q * q - _scalar(c) * second * 4


def example_quartic(r: int, a_list: Sequence | None = None, c="c") -> dict:
    """Oracle, transfer cross-check and the per-convention comparison table."""
    a_list = list(a_list) if a_list is not None else [f"a{i}" for i in range(1, r + 1)]
    if len(a_list) != r:
        raise ValueError(f"need {r} Pfister parameters")
    cross = {}
    oracles = {}
    for sign in SIGNS:
        oracle = quartic_oracle(a_list, c, sign)
        phi0 = pfister_form(a_list, sign)
        E = kummer_extension(2, c if isinstance(c, str) else QQ(c))
        T = transfer_form(E, phi0, ("u", "w"))
        cross[sign] = identity_test(oracle.poly, T.poly).passed
        oracles[sign] = oracle
    table = {}
    for sign, layout, pairing in itertools.product(SIGNS, LAYOUTS, PAIRINGS):
        formula = quartic_formula(a_list, c, sign, layout, pairing)
        table[f"{sign}/{layout}/{pairing}"] = identity_test(formula, oracles[sign].poly).passed
    oracle = oracles["minus"]
    report = VerifyReport(
        "pfister-quartic-transfer", "exact", all(cross.values()),
        ["quartic transfer of a Pfister form through a quadratic extension"],
        {"r": r, "a": [str(a) for a in a_list], "c": str(c)},
        {"oracle_equals_transfer": cross, "formula_matches": table,
         "matching_conventions": [k for k, v in table.items() if v],
         "degree": oracle.degree, "dimension": oracle.dim},
        {"signs": list(SIGNS), "layouts": list(LAYOUTS), "pairings": list(PAIRINGS)})
    return {"oracle": oracle, "oracles": oracles, "report": report}


# -- sextic ----------------------------------------------------------------------------

def _eisenstein_ring() -> QuotientRing:
    one = SparsePoly.const(1)
    return QuotientRing([one, one, one], name="omega")


def sextic_oracle(a_list: Sequence, c="c", sign: str = "minus") -> Form:
    """Product of the three conjugates ``t -> omega^k t`` of ``phi0(u + v t + w t^2)``."""
    coefs = pfister_coefficients(a_list, sign)
    n = len(coefs)
    cp = _scalar(c)
    W = _eisenstein_ring()
    L = QuotientRing([W.embed(-cp), W.zero, W.zero, W.one], name="t", base=W)
    u, v, w = _gens("u", n), _gens("v", n), _gens("w", n)
    val = L.zero
    for coef, uj, vj, wj in zip(coefs, u, v, w):
        z = L.element([W.embed(uj), W.embed(vj), W.embed(wj)])
        val = val + z * z * L.embed(W.embed(coef))
    prod = val
    for k in (1, 2):
        image = L.element([W.zero, W.gen ** k, W.zero])
        prod = prod * L.apply_generator_map(val, image)
    if prod.coords[1] or prod.coords[2] or prod.coords[0].coords[1]:
        raise AssertionError("conjugate product is not rational")
    names = tuple(f"{b}{j}" for j in range(1, n + 1) for b in "uvw")
    return Form(prod.coords[0].coords[0], 6, names, _params(a_list, c),
                origin={"kind": "transfer-oracle", "extension_degree": 3})


def _block_value(coefs_x, xs, coefs_y, ys, interpretation: str) -> SparsePoly:
    acc = SparsePoly.const(0)
    power = 3 if interpretation == "cubic-diagonal" else 2
    for coef, x in zip(coefs_x, xs):
        acc = acc + coef * x ** power
    for coef, y in zip(coefs_y, ys):
        if interpretation == "cube-with-linear-products":
            acc = acc + coef * y
        else:
            acc = acc + coef * y ** power
    return acc


def sextic_formula(a_list: Sequence, c="c", sign: str = "minus",
                   interpretation: str = "cube-of-quadratic-value") -> SparsePoly:
    """``A^3 + c B^3 + c^2 C^3 - 3c A B C`` with ``A, B, C`` read per ``interpretation``."""
    if interpretation not in INTERPRETATIONS:
        raise ValueError(f"interpretation must be one of {INTERPRETATIONS}")
    coefs = pfister_coefficients(a_list, sign)
    n = len(coefs)
    cp = _scalar(c)
    s = -1 if sign == "minus" else 1
    u, v, w = _gens("u", n), _gens("v", n), _gens("w", n)
    vw = [a * b for a, b in zip(v, w)]
    uv = [a * b for a, b in zip(u, v)]
    uw = [a * b for a, b in zip(u, w)]
    blocks = [
        (coefs, u, [k * cp * 2 * s for k in coefs], vw),
        ([k * cp for k in coefs], w, [k * 2 for k in coefs], uv),
        (coefs, v, [k * 2 for k in coefs], uw),
    ]
    if interpretation == "cubic-diagonal":
        A, B, C = (_block_value(*b, "cubic-diagonal") for b in blocks)
        a, b_, c_ = (_block_value(*b, "cube-of-quadratic-value") for b in blocks)
        return A + cp * B + cp * cp * C - cp * 3 * a * b_ * c_
    A, B, C = (_block_value(*b, interpretation) for b in blocks)
    return A ** 3 + cp * B ** 3 + cp * cp * C ** 3 - cp * 3 * A * B * C


def example_sextic(r: int = 1, a_list: Sequence | None = None, c="c") -> dict:
    a_list = list(a_list) if a_list is not None else [f"a{i}" for i in range(1, r + 1)]
    if len(a_list) != r:
        raise ValueError(f"need {r} Pfister parameters")
    cross, table, oracles = {}, {}, {}
    for sign in SIGNS:
        oracle = sextic_oracle(a_list, c, sign)
        phi0 = pfister_form(a_list, sign)
        E = kummer_extension(3, c if isinstance(c, str) else QQ(c))
        T = transfer_form(E, phi0, ("u", "v", "w"))
        cross[sign] = identity_test(oracle.poly, T.poly).passed
        oracles[sign] = oracle
        for interp in INTERPRETATIONS:
            f = sextic_formula(a_list, c, sign, interp)
            table[f"{sign}/{interp}"] = identity_test(f, oracle.poly).passed
    oracle = oracles["minus"]
    shape_ok = oracle.degree == 6 and oracle.dim == 3 * 2 ** r
    report = VerifyReport(
        "pfister-sextic-transfer", "exact", all(cross.values()) and shape_ok,
        ["sextic transfer of a Pfister form through a cubic Kummer extension"],
        {"r": r, "a": [str(a) for a in a_list], "c": str(c), "base": "Q(omega)"},
        {"oracle_equals_transfer": cross, "degree": oracle.degree, "dimension": oracle.dim,
         "interpretation_matches": table,
         "matching_interpretations": [k for k, v in table.items() if v]},
        {"signs": list(SIGNS), "interpretations": list(INTERPRETATIONS)})
    return {"oracle": oracle, "oracles": oracles, "report": report}
