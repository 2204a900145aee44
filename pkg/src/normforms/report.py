"""Structured verification reports.

Every checker in the package returns a :class:`VerifyReport`. Payloads are
normalized to JSON-safe values at construction (exact rationals become
``"p/q"`` strings), so ``VerifyReport.from_json(r.to_json()) == r`` holds
for every report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = 1


def jsonable(x: Any) -> Any:
    """Convert exact algebraic values into JSON-safe data."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=_sort_key)
    # late imports keep this module dependency-free for the CLI
    from .exactalg.ext import QElem
    from .exactalg.fields import ModInt
    from .exactalg.matrix import RingMatrix

    if isinstance(x, ModInt):
        return x.v
    if isinstance(x, QElem):
        ring = x.ring
        if hasattr(ring, "serialize"):
            return ring.serialize(x)
        return [jsonable(c) for c in x.coords]
    if isinstance(x, RingMatrix):
        return [[jsonable(v) for v in r] for r in x.rows]
    return str(x)


def _sort_key(v):
    if isinstance(v, int):
        return (0, v, "")
    if isinstance(v, str):
        try:
            return (0, Fraction(v), "")
        except ValueError:
            return (1, 0, v)
    return (2, 0, json.dumps(v, sort_keys=True))


@dataclass
class VerifyReport:
    identity: str
    mode: str
    passed: bool
    anchors: list = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    conventions: dict = field(default_factory=dict)
    seed: int | None = None
    wall_time: float | None = None
    version: int = SCHEMA_VERSION

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.anchors = jsonable(list(self.anchors))
        self.parameters = jsonable(dict(self.parameters))
        self.witness = jsonable(dict(self.witness))
        self.conventions = jsonable(dict(self.conventions))

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "identity": self.identity,
            "anchors": self.anchors,
            "mode": self.mode,
            "parameters": self.parameters,
            "pass": self.passed,
            "witness": self.witness,
            "conventions": self.conventions,
            "seed": self.seed,
            "wall_time": self.wall_time,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerifyReport":
        return cls(
            identity=d["identity"],
            mode=d["mode"],
            passed=d["pass"],
            anchors=d.get("anchors", []),
            parameters=d.get("parameters", {}),
            witness=d.get("witness", {}),
            conventions=d.get("conventions", {}),
            seed=d.get("seed"),
            wall_time=d.get("wall_time"),
            version=d.get("version", SCHEMA_VERSION),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerifyReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.identity} [{self.mode}]"


def combine(identity: str, reports: list[VerifyReport], **extra) -> VerifyReport:
    """Aggregate a batch: passes iff every member passes."""
    failures = [r for r in reports if not r.passed]
    witness = {"cases": len(reports), "failures": len(failures)}
    if failures:
        witness["first_failure"] = failures[0].to_dict()
    modes = sorted({r.mode for r in reports}) or ["exact"]
    return VerifyReport(identity=identity, mode="+".join(modes), passed=not failures,
                        witness=witness, **extra)
