"""Norms of simple extensions and the identities built from them."""

from .kummer import (QuadraticContext, SigmaInvariantError, a_list_latex, kummer_vector,
                     trinomial_vector, verify_kummer_norm_identity,
                     verify_trinomial_norm_identity)
from .norms import (absolute_norm, kummer_extension, multiplication_table, norm, norm_form,
                    regular_rep, symbolic_extension, transfer_form)
from .towers import (COPRIME, GALOIS, GUARANTEED, P_POWER, UNKNOWN, TowerNorm, TowerPlan,
                     absolute_minpoly, norm_tower_factor, tower_plan)
from .transitivity import NotLinearlyDisjoint, compositum, verify_transitivity_instance

__all__ = [
    "COPRIME", "GALOIS", "GUARANTEED", "NotLinearlyDisjoint", "P_POWER", "QuadraticContext",
    "SigmaInvariantError", "TowerNorm", "TowerPlan", "UNKNOWN", "a_list_latex",
    "absolute_minpoly", "absolute_norm", "compositum", "kummer_extension", "kummer_vector",
    "multiplication_table", "norm", "norm_form", "norm_tower_factor", "regular_rep",
    "symbolic_extension", "tower_plan", "transfer_form", "trinomial_vector",
    "verify_kummer_norm_identity", "verify_transitivity_instance",
    "verify_trinomial_norm_identity",
]
