"""Structural classifier for forms whose norm principle holds for trivial reasons.

Two mechanisms make the principle automatic: every scalar is a similarity
factor, or the similarity factors over every extension are exactly the
``d``-th powers. The classifier only reads the structural descriptor of a
form (how it was built); it never searches for isometries.
"""

from __future__ import annotations

from dataclasses import dataclass

ALL_UNITS = "trivial-via-G=F^x"
DTH_POWERS = "trivial-via-G=d-th-powers"
UNCLASSIFIED = "not-classified"


@dataclass(frozen=True)
class Classification:
    verdict: str
    clause: str | None
    reason: str

    @property
    def trivial(self) -> bool:
        return self.verdict != UNCLASSIFIED


def classify_trivial_snp(descriptor) -> Classification:
    """Classify a form given its ``origin`` descriptor (or the form itself).

    Recognized descriptors:

    * ``{"kind": "diagonal", "degree": d, "coeffs": [...]}``
    * ``{"kind": "determinant", "degree": d}``
    * ``{"kind": "scalar-times-form", "degree": d + 1, "characteristic": p}``
    """
    if hasattr(descriptor, "origin"):
        descriptor = descriptor.origin
    kind = descriptor.get("kind")
    if kind == "diagonal":
        d = int(descriptor["degree"])
        coeffs = [str(c) for c in descriptor["coeffs"]]
        n = len(coeffs)
        if d < 3:
            return Classification(UNCLASSIFIED, None, "diagonal clauses need degree >= 3")
        if n == 1:
            return Classification(DTH_POWERS, "diagonal-dimension",
                                  "one-dimensional diagonal form")
        if n % d in (1, d - 1):
            s = (n + 1) // d if n % d == d - 1 else (n - 1) // d
            return Classification(DTH_POWERS, "diagonal-dimension",
                                  f"diagonal of dimension {n} = {s}*{d}"
                                  f"{'+1' if n % d == 1 else '-1'}")
        if len(set(coeffs)) == 1:
            return Classification(DTH_POWERS, "constant-diagonal",
                                  "all diagonal coefficients are equal")
        return Classification(UNCLASSIFIED, None, f"diagonal of dimension {n} not +-1 mod {d}")
    if kind == "determinant":
        return Classification(ALL_UNITS, "determinant",
                              "determinant of square matrices: every unit is a similarity factor")
    if kind == "scalar-times-form":
        d = int(descriptor["degree"])
        char = int(descriptor.get("characteristic", 0))
        if char and char <= d:
            return Classification(UNCLASSIFIED, None,
                                  f"characteristic {char} too small for degree {d}")
        return Classification(ALL_UNITS, "scalar-times-form",
                              "phi(a + u) = a * phi0(u) represents and scales by every unit")
    return Classification(UNCLASSIFIED, None, f"no triviality clause for origin {kind!r}")
