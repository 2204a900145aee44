"""Forms of higher degree: construction, polarization, value sets, composition."""

from .algebra import AlgebraStructure, permits_composition_check
from .classify import Classification, classify_trivial_snp
from .form import (Form, determinant_form, diagonal_form, homogeneity_defect, power_form,
                   product_form, scalar_times_form, scale)
from .io import FormFileError, dump_form, form_from_dict, form_to_dict, load_form
from .isometry import (BudgetExceeded, SingularMatrixError, ValueSet, generated_subgroup,
                       isometry_witness_check, value_set)
from .polar import MultilinearMap, is_nondegenerate, polarize, polarize_by_derivatives, radical

__all__ = [
    "AlgebraStructure", "BudgetExceeded", "Classification", "Form", "FormFileError",
    "MultilinearMap", "SingularMatrixError", "ValueSet", "classify_trivial_snp",
    "determinant_form", "diagonal_form", "dump_form", "form_from_dict", "form_to_dict",
    "generated_subgroup", "homogeneity_defect", "is_nondegenerate", "isometry_witness_check",
    "load_form", "permits_composition_check", "polarize", "polarize_by_derivatives",
    "power_form", "product_form", "radical", "scalar_times_form", "scale", "value_set",
]
