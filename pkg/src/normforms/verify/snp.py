"""Exhaustive norm-principle checks over finite fields and bounded rational searches."""

from __future__ import annotations

import itertools
import math
import time
from fractions import Fraction

from ..exactalg.fields import QQ, PrimeField
from ..forms.form import Form
from ..forms.isometry import DEFAULT_BUDGET, BudgetExceeded, value_set
from ..report import VerifyReport
from .finite import ZERO, field_table

ANCHORS = ["norms of similarity factors over an extension are similarity factors over the base"]


class NotCompositionType(ValueError):
    """Value sets only describe similarity factors for composition-type forms."""


def _log_terms(phi: Form, T):
    """``[(log coefficient, [(var index, exponent)])]`` over ``GF(p^m)``."""
    p = T.p
    out = []
    for e, c in phi.poly.terms.items():
        out.append((T.log_of_int(int(c) % p), [(i, k) for i, k in enumerate(e) if k]))
    return out


def _eval_log(terms, point, T) -> int:
    acc = ZERO
    order = T.order
    for lc, mono in terms:
        t = lc
        for i, k in mono:
            x = point[i]
            if x == ZERO:
                t = ZERO
                break
            t = (t + k * x) % order
        if t != ZERO:
            acc = T.add_log(acc, t)
    return acc


def projective_points(n: int, order: int):
    """Points of ``P^(n-1)`` in log coordinates: first nonzero entry equal to 1 (log 0)."""
    coords = [ZERO] + list(range(order))
    for lead in range(n):
        head = (ZERO,) * lead + (0,)
        for tail in itertools.product(coords, repeat=n - lead - 1):
            yield head + tail


def extension_value_classes(phi: Form, m: int, budget: int = DEFAULT_BUDGET):
    """Residues ``log(phi(v)) mod gcd(d, p^m - 1)`` over ``GF(p^m)``.

    ``phi`` is homogeneous, so its nonzero values form a union of cosets of
    the ``d``-th powers; each coset is a residue class of discrete logs. The
    enumeration runs over projective points and stops once every class is hit.
    """
    p = phi.field.p
    T = field_table(p, m)
    g = math.gcd(phi.degree, T.order)
    n = phi.dim
    count = (T.Q ** n - 1) // (T.Q - 1)
    if count > budget:
        raise BudgetExceeded(f"{count} projective points over GF({p}^{m}) exceed budget {budget}")
    terms = _log_terms(phi, T)
    classes: set[int] = set()
    seen = 0
    for point in projective_points(n, T.order):
        seen += 1
        v = _eval_log(terms, point, T)
        if v != ZERO:
            classes.add(v % g)
            if len(classes) == g:
                break
    return T, g, classes, seen


def snp_bruteforce(phi: Form, m: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Check ``N(D_K) <= <D_F>`` for ``K = GF(q^m)``, ``F = GF(q)``, ``q`` prime."""
    if not isinstance(phi.field, PrimeField):
        raise ValueError("snp_bruteforce needs a form over a prime field")
    if not phi.permits_composition:
        raise NotCompositionType(
            "form carries no composition algebra; represented values need not be "
            "similarity factors")
    if m < 1:
        raise ValueError("extension degree must be positive")
    start = time.perf_counter()
    q = phi.field.p
    base = value_set(phi, budget=budget)
    T, g, classes, seen = extension_value_classes(phi, m, budget)
    norms = set()
    for k in range(T.order):
        if k % g in classes:
            norms.add(T.norm_of_log(k))
    target = base.subgroup
    bad = sorted(norms - target)
    witness = {
        "D_F": sorted(base.values),
        "subgroup_D_F": sorted(target),
        "D_K_log_classes": {"modulus": g, "residues": sorted(classes)},
        "D_K_size": sum(1 for k in range(T.order) if k % g in classes),
        "norms_of_D_K": sorted(norms),
        "projective_points_visited": seen,
        "primitive_polynomial": T.poly,
    }
    if bad:
        k = next(k for k in range(T.order) if k % g in classes and T.norm_of_log(k) in bad)
        witness["counterexample"] = {"element_log": k, "element": T.exp[k],
                                     "norm": T.norm_of_log(k)}
    rep = VerifyReport("finite-field-snp", "exhaustive", not bad, ANCHORS,
                       {"q": q, "m": m, "degree": phi.degree, "dim": phi.dim,
                        "form": str(phi.poly)}, witness)
    rep.wall_time = round(time.perf_counter() - start, 6)
    return rep


# -- bounded rational witnesses ---------------------------------------------------------

def _small_first(x: int) -> int:
    return 2 * x - 1 if x > 0 else -2 * x


def _shell(n: int, h: int):
    """Integer vectors with ``max|v_i| = h``: sparse first, then positive before negative."""
    rng = range(-h, h + 1)
    shell = [v for v in itertools.product(rng, repeat=n) if max(map(abs, v)) == h]
    shell.sort(key=lambda v: (sum(1 for x in v if x), [_small_first(x) for x in v]))
    return shell


def bounded_witness_search(phi: Form, target, height: int, budget: int = DEFAULT_BUDGET) -> dict:
    """Search ``v`` of height ``<= height`` with ``phi(v) = target``.

    Points are ``w / den`` with integer ``w``, ``max|w_i| <= height`` and
    ``1 <= den <= height``; smaller numerators are tried first. Exhaustion is
    reported as ``{"found": False, "exhausted": True}`` and proves nothing.
    """
    if phi.field is not QQ:
        raise ValueError("bounded_witness_search works over QQ")
    target = QQ(target)
    n = phi.dim
    total = (2 * height + 1) ** n * height
    if total > budget:
        raise BudgetExceeded(f"{total} candidate points exceed budget {budget}")
    tried = 0
    for den in range(1, height + 1):
        scaled = target * den ** phi.degree
        for h in range(height + 1):
            for w in _shell(n, h):
                tried += 1
                if math.gcd(den, *w) != 1:
                    continue
                if phi.poly.eval(list(w)) == scaled:
                    point = [Fraction(x, den) for x in w]
                    return {"found": True, "point": point, "height": max(h, den),
                            "tried": tried}
    return {"found": False, "exhausted": True, "height": height, "tried": tried}
