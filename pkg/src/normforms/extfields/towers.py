"""Norm factorization through a subfield, and the tower planner.

The planner encodes which towers ``F = K_0 < K_1 < ... < K_n = K`` are known
to satisfy the norm principle for a given kind of form. It never searches for
intermediate fields or Galois groups: Galois flags are declared by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from ..exactalg.ext import QElem, SimpleExt
from ..exactalg.fields import divide
from ..exactalg.matrix import RingMatrix
from .norms import absolute_norm

P_POWER = "p-power"
COPRIME = "coprime"
GALOIS = "galois"
UNKNOWN = "unknown"

GUARANTEED = "SNP-guaranteed"

FORM_KINDS = ("prime-field-norm", "cubic-field-norm", "cubic-composition",
              "galois-subfield-norm", "round-transfer")


# -- norm through the subfield generated by an element -------------------------

def flatten(K, a) -> list:
    """Coordinates of ``a`` over the prime field, through every tower level."""
    if not isinstance(K, SimpleExt):
        return [a]
    a = K(a)
    out = []
    for c in a.coords:
        out.extend(flatten(K.base, c))
    return out


def absolute_minpoly(K: SimpleExt, a) -> list:
    """Minimal polynomial of ``a`` over the prime field (Krylov dependency)."""
    a = K(a)
    n = K.absolute_degree
    vecs = []
    power = K.one
    for _ in range(n + 1):
        vecs.append(flatten(K, power))
        null = RingMatrix([[v[i] for v in vecs] for i in range(n)]).nullspace()
        if null:
            rel = null[0]
            lead = rel[-1]
            return [divide(c, lead) for c in rel]
        power = power * a
    raise AssertionError("dependency must appear by degree [K:F]")


@dataclass(frozen=True)
class TowerNorm:
    norm: object
    subfield_degree: int
    exponent: int
    subfield_norm: object
    minpoly: tuple
    d: int | None = None

    @property
    def consistent(self) -> bool:
        return self.norm == self.subfield_norm ** self.exponent

    @property
    def is_dth_power(self) -> bool | None:
        """True when ``d`` divides the exponent; None when that test is silent."""
        if self.d is None:
            return None
        return True if self.exponent % self.d == 0 else None


def norm_tower_factor(K: SimpleExt, a, d: int | None = None) -> TowerNorm:
    """``N_{K/F}(a) = N_{F(a)/F}(a)^[K:F(a)]`` with both sides computed."""
    a = K(a) if not isinstance(a, QElem) or a.ring is not K else a
    mp = absolute_minpoly(K, a)
    m = len(mp) - 1
    sub = (-1) ** m * mp[0]
    return TowerNorm(absolute_norm(K, a), m, K.absolute_degree // m, sub, tuple(mp), d)


# -- tower planner -------------------------------------------------------------

def is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class StepVerdict:
    degree: int
    verdict: str
    rule: str


@dataclass
class TowerPlan:
    steps: list[int]
    p: int
    form: str
    step_verdicts: list[StepVerdict]
    verdict: str
    reason: str
    extra: dict = field(default_factory=dict)

    @property
    def guaranteed(self) -> bool:
        return self.verdict == GUARANTEED

    def to_dict(self) -> dict:
        return {"steps": self.steps, "p": self.p, "form": self.form,
                "step_verdicts": [vars(s) for s in self.step_verdicts],
                "verdict": self.verdict, "reason": self.reason, "extra": self.extra}

    def render(self) -> str:
        lines = [f"form: {self.form}, p = {self.p}, tower degrees {self.steps}"]
        for i, s in enumerate(self.step_verdicts, 1):
            lines.append(f"  step {i}: degree {s.degree:<4} {s.verdict:<8} {s.rule}")
        lines.append(f"verdict: {self.verdict} ({self.reason})")
        return "\n".join(lines)


def _step(m: int, p: int, galois: bool) -> StepVerdict:
    if is_power_of(m, p):
        return StepVerdict(m, P_POWER, f"degree a power of {p}: norm is a p-th power")
    if gcd(m, p) == 1:
        return StepVerdict(m, COPRIME, f"degree coprime to {p}: transitivity through K(alpha)")
    if galois:
        return StepVerdict(m, GALOIS, "Galois: splits into a p-power step over a coprime step")
    return StepVerdict(m, UNKNOWN, f"mixed degree {m} without a Galois flag")


def tower_plan(steps: Sequence[int], p: int, galois: Sequence[bool] | bool | None = None, *,
               form: str = "prime-field-norm", total_galois: bool | None = None,
               subfield_degree: int | None = None) -> TowerPlan:
    """Decide which towers are covered for a form of prime degree ``p``.

    ``galois`` flags each step (or all steps at once); ``total_galois`` flags
    ``K/F`` itself. ``form`` selects the kind of form:

    * ``prime-field-norm``: norm of a field extension of prime degree ``p``
    * ``cubic-field-norm``: the same with ``p = 3``
    * ``cubic-composition``: a cubic composition form that is not a field norm
    * ``galois-subfield-norm``: ``N_{L/F}`` with ``[L:F'] = p`` and ``F'/F``
      Galois of degree ``subfield_degree``
    * ``round-transfer``: a transfer from ``F'`` (degree ``subfield_degree``)
      of a degree-``p`` form that stays round over every extension
    """
    steps = [int(m) for m in steps]
    if not steps or any(m < 1 for m in steps):
        raise ValueError("tower degrees must be positive integers")
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if form not in FORM_KINDS:
        raise ValueError(f"unknown form kind {form!r}; choose from {FORM_KINDS}")
    if form.startswith("cubic") and p != 3:
        raise ValueError("cubic form kinds need p = 3")
    if isinstance(galois, bool) or galois is None:
        flags = [bool(galois)] * len(steps)
    else:
        flags = [bool(g) for g in galois]
        if len(flags) != len(steps):
            raise ValueError("one Galois flag per step")
    total = 1
    for m in steps:
        total *= m
    if total_galois is None:
        total_galois = len(steps) == 1 and flags[0]
    verdicts = [_step(m, p, g) for m, g in zip(steps, flags)]
    extra = {"total_degree": total, "total_galois": total_galois}

    def plan(ok: bool, reason: str) -> TowerPlan:
        return TowerPlan(steps, p, form, verdicts, GUARANTEED if ok else UNKNOWN, reason, extra)

    if form == "cubic-composition":
        return plan(True, "cubic composition form that is not a field norm: "
                          "all finite separable extensions")
    if form in ("prime-field-norm", "cubic-field-norm"):
        if total_galois:
            return plan(True, "K/F Galois")
        if all(v.verdict != UNKNOWN for v in verdicts):
            return plan(True, "every step is a p-power, coprime or Galois")
        return plan(False, "a step is neither a p-power nor coprime and not declared Galois; "
                           "open in general")
    if subfield_degree is None or subfield_degree < 1:
        raise ValueError(f"form kind {form!r} needs subfield_degree = [F':F]")
    extra["subfield_degree"] = subfield_degree
    n = subfield_degree
    if form == "galois-subfield-norm":
        if total_galois and gcd(total, n) == 1:
            return plan(True, f"K/F Galois of degree coprime to [F':F] = {n}")
        if gcd(total, p * n) == 1:
            return plan(True, f"degree coprime to p*[F':F] = {p * n}")
        return plan(False, "needs K/F Galois of degree coprime to [F':F]")
    if is_power_of(total, p) and gcd(total, n) == 1:
        return plan(True, f"degree a power of {p}, coprime to [F':F] = {n}")
    return plan(False, f"needs degree a power of {p} coprime to [F':F] = {n}")
