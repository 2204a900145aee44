"""Explicit similarity witnesses for forms that permit composition.

Left multiplication by ``x0`` carries ``phi`` to ``phi(x0) * phi``, because
``phi(x0 v) = phi(x0) phi(v)``. Roundness is only ever exercised through
these witnesses.
"""

from __future__ import annotations

from typing import Sequence

from ..exactalg.matrix import RingMatrix
from ..forms.form import Form, scale
from ..forms.isometry import isometry_witness_check
from ..report import VerifyReport, jsonable


class NotInvertibleElement(ValueError):
    pass


def roundness_witness(phi: Form, x0: Sequence) -> RingMatrix:
    if phi.algebra is None:
        raise ValueError("form carries no composition algebra")
    F = phi.field
    x0 = [F(c) for c in x0]
    if len(x0) != phi.dim:
        raise ValueError(f"point must have {phi.dim} coordinates")
    if not phi.evaluate(x0):
        raise NotInvertibleElement(f"phi({x0}) = 0, so x0 is not invertible")
    return phi.algebra.left_matrix(x0)


def roundness_check(phi: Form, x0: Sequence) -> VerifyReport:
    """``phi(M v) == phi(x0) phi(v)`` for the witness ``M`` of ``x0``."""
    M = roundness_witness(phi, x0)
    value = phi.evaluate([phi.field(c) for c in x0])
    rep = isometry_witness_check(scale(phi, value), phi, M, identity="roundness-witness")
    rep.parameters["factor"] = value
    rep.witness["matrix"] = jsonable(M)
    return rep
