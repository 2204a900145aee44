"""Quaternion algebras, split matrix algebras and reduced norms of determinants."""

from .dieudonne import (PIVOTS, QuatMatrix, delta_over_k, ndet, rho_of_delta,
                        verify_reduced_norm_transfer)
from .probe import (adjugate, candidate_constants, probe_quaternion_constant, second_coefficient,
                    sharp3, verify_split3_constant)
from .quaternion import (NotDivisionAlgebra, Quaternion, QuaternionAlgebra, norm_form_zero, nrd,
                         quat_arith, split_embedding)

__all__ = [
    "NotDivisionAlgebra", "PIVOTS", "QuatMatrix", "Quaternion", "QuaternionAlgebra", "adjugate",
    "candidate_constants", "delta_over_k", "ndet", "norm_form_zero", "nrd",
    "probe_quaternion_constant", "quat_arith", "rho_of_delta", "second_coefficient", "sharp3",
    "split_embedding", "verify_reduced_norm_transfer", "verify_split3_constant",
]
