"""Isometry witnesses and value sets over prime fields."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..exactalg.fields import PrimeField
from ..exactalg.identity import identity_test
from ..exactalg.matrix import RingMatrix, SingularMatrix
from ..report import VerifyReport
from .form import Form

DEFAULT_BUDGET = 2**24


class SingularMatrixError(SingularMatrix):
    """A proposed isometry witness is not invertible."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


def isometry_witness_check(phi1: Form, phi2: Form, M: RingMatrix,
                           identity: str = "isometry-witness") -> VerifyReport:
    """Pass iff ``phi2(M v) == phi1(v)`` identically in ``v``."""
    if phi1.dim != phi2.dim or M.shape != (phi1.dim, phi1.dim):
        raise ValueError("witness must be an n x n matrix for forms of equal dimension")
    if phi1.degree != phi2.degree:
        return VerifyReport(identity, "exact", False,
                            witness={"reason": "degrees differ",
                                     "degrees": [phi1.degree, phi2.degree]})
    det = M.det()
    if det == 0:
        raise SingularMatrixError("isometry witness is singular")
    image = M.apply(phi1.var_polys())
    lhs = phi2.evaluate(image)
    rep = identity_test(lhs, phi1.poly, "exact", identity=identity)
    rep.parameters.update({"dimension": phi1.dim, "degree": phi1.degree,
                           "determinant": det})
    return rep


@dataclass(frozen=True)
class ValueSet:
    """Nonzero values of a form over GF(p), and the subgroup they generate."""

    p: int
    values: frozenset
    subgroup: frozenset
    evaluations: int

    def __contains__(self, x):
        return int(x) % self.p in self.values


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    n = p - 1
    factors = _prime_factors(n)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"{p} has no primitive root")


def _prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def generated_subgroup(values, p: int) -> frozenset:
    """Subgroup of ``GF(p)^x`` generated by ``values``."""
    values = [v % p for v in values if v % p]
    if not values:
        return frozenset()
    g = primitive_root(p)
    log = {}
    x = 1
    for k in range(p - 1):
        log[x] = k
        x = x * g % p
    step = p - 1
    for v in values:
        step = math.gcd(step, log[v])
    return frozenset(pow(g, k, p) for k in range(0, p - 1, step))


def compile_mod_p(phi: Form, p: int):
    """Fast integer evaluator ``point -> phi(point) mod p``."""
    if phi.params:
        raise ValueError("cannot enumerate a form with symbolic parameters")
    terms = []
    for e, c in phi.poly.terms.items():
        ci = int(c) if hasattr(c, "v") else _mod(c, p)
        terms.append((ci % p, [(i, k) for i, k in enumerate(e) if k]))

    def ev(point):
        acc = 0
        for c, mono in terms:
            t = c
            for i, k in mono:
                t = t * pow(point[i], k, p) % p
            acc += t
        return acc % p

    return ev


def _mod(c, p):
    from fractions import Fraction

    c = Fraction(c)
    return c.numerator * pow(c.denominator, -1, p) % p


def value_set(phi: Form, p: int | None = None, budget: int = DEFAULT_BUDGET) -> ValueSet:
    """Enumerate ``D(phi)`` over a prime field by brute force."""
    if p is None:
        if not isinstance(phi.field, PrimeField):
            raise ValueError("value_set needs a prime-field form or an explicit p")
        p = phi.field.p
    count = p ** phi.dim
    if count > budget:
        raise BudgetExceeded(f"{p}^{phi.dim} = {count} evaluations exceed budget {budget}")
    ev = compile_mod_p(phi, p)
    values = set()
    for point in itertools.product(range(p), repeat=phi.dim):
        v = ev(point)
        if v:
            values.add(v)
    return ValueSet(p, frozenset(values), generated_subgroup(values, p), count)
