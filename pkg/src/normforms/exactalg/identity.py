"""Polynomial identity testing.

Exact mode expands ``p - q`` and checks it is zero. Probabilistic mode is
the Schwartz-Zippel test: evaluate at uniform points of ``GF(prime)^n``; a
nonzero polynomial of total degree ``D`` vanishes at such a point with
probability at most ``D / prime``, so ``trials`` clean evaluations bound
the false-pass probability by ``(D / prime) ** trials``.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Sequence

from ..report import VerifyReport
from .fields import GF, PrimeField, format_rational
from .poly import SparsePoly

DEFAULT_PRIME = 2**61 - 1
DEFAULT_TRIALS = 3


def failure_bound(degree: int, prime: int, trials: int) -> Fraction:
    return Fraction(max(degree, 0), prime) ** trials


def _bound_fields(degree: int, prime: int, trials: int) -> dict:
    b = failure_bound(degree, prime, trials)
    log2 = trials * (math.log2(degree) - math.log2(prime)) if degree > 0 else float("-inf")
    return {"failure_bound": format_rational(b),
            "failure_bound_log2": None if b == 0 else round(log2, 3)}


def _nonzero_point(diff: SparsePoly) -> list:
    """A small integer point where a nonzero polynomial does not vanish."""
    n = len(diff.vars)
    rng = random.Random(0)
    for bound in (1, 2, 3, 5, 10, 100, 10**6):
        for _ in range(64):
            pt = [rng.randint(-bound, bound) for _ in range(n)]
            if diff.eval(pt) != 0:
                return pt
    raise AssertionError("nonzero polynomial vanished at every sampled point")


def identity_test(p: SparsePoly, q: SparsePoly, mode: str = "exact", *,
                  prime: int = DEFAULT_PRIME, trials: int = DEFAULT_TRIALS,
                  seed: int = 0, identity: str = "polynomial-identity") -> VerifyReport:
    """Decide (exactly or probabilistically) whether ``p == q``."""
    diff = p - q
    if not isinstance(diff, SparsePoly):
        diff = SparsePoly.const(diff)
    variables = list(diff.vars)
    if mode == "exact":
        params = {"variables": variables, "total_degree": diff.total_degree()}
        if diff.is_zero():
            return VerifyReport(identity, "exact", True, parameters=params)
        mono, coeff = diff.leading_term()
        point = _nonzero_point(diff)
        witness = {
            "monomial": dict(zip(variables, mono)),
            "coefficient": diff.field.format(coeff) if not isinstance(coeff, (int, Fraction))
            else format_rational(coeff),
            "point": point,
            "difference_at_point": diff.eval(point),
        }
        return VerifyReport(identity, "exact", False, parameters=params, witness=witness)
    if mode != "probabilistic":
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(diff.field, PrimeField):
        prime = diff.field.p
    deg = max(diff.total_degree(), 0)
    if prime <= deg:
        raise ValueError(f"prime {prime} does not exceed total degree {deg}")
    rng = random.Random(seed)
    F = GF(prime)
    for t in range(trials):
        pt = [rng.randrange(prime) for _ in variables]
        if isinstance(diff.field, PrimeField):
            val = diff.eval([F(v) for v in pt]).v
        else:
            val = diff.eval_mod(pt, prime)
        if val:
            return VerifyReport(identity, "probabilistic", False, seed=seed,
                                parameters={"prime": prime, "trials": trials,
                                            "degree_bound": deg, "variables": variables},
                                witness={"point": pt, "trial": t, "difference_mod_prime": val})
    return VerifyReport(identity, "probabilistic", True, seed=seed,
                        parameters={"prime": prime, "trials": trials, "degree_bound": deg,
                                    "variables": variables},
                        witness=_bound_fields(deg, prime, trials))


def blackbox_identity_test(lhs: Callable[[dict], object], rhs: Callable[[dict], object],
                           variables: Sequence[str], degree_bound: int, *,
                           prime: int = DEFAULT_PRIME, trials: int = DEFAULT_TRIALS,
                           seed: int = 0, identity: str = "blackbox-identity",
                           sampler: Callable | None = None) -> VerifyReport:
    """Schwartz-Zippel on two evaluation procedures.

    ``lhs`` and ``rhs`` receive a mapping from variable names to ``GF(prime)``
    elements and return field elements. ``degree_bound`` must bound the total
    degree of ``lhs - rhs`` viewed as a polynomial in ``variables``.
    ``sampler(rng, F)`` may override the point distribution (it must still
    draw each coordinate uniformly).
    """
    if prime <= degree_bound:
        raise ValueError(f"prime {prime} does not exceed degree bound {degree_bound}")
    F = GF(prime)
    rng = random.Random(seed)
    params = {"prime": prime, "trials": trials, "degree_bound": degree_bound,
              "variables": list(variables)}
    for t in range(trials):
        if sampler is not None:
            point = sampler(rng, F)
        else:
            point = {v: F(rng.randrange(prime)) for v in variables}
        a, b = lhs(point), rhs(point)
        if a != b:
            return VerifyReport(identity, "probabilistic", False, seed=seed, parameters=params,
                                witness={"point": {k: int(v) for k, v in point.items()},
                                         "trial": t, "lhs": a, "rhs": b})
    return VerifyReport(identity, "probabilistic", True, seed=seed, parameters=params,
                        witness=_bound_fields(degree_bound, prime, trials))
