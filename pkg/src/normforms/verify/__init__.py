"""Finite-field norm-principle checks, Pfister transfers and roundness witnesses."""

from .finite import FiniteFieldTable, field_table, norm_map_agrees, primitive_polynomial
from .pfister import (INTERPRETATIONS, LAYOUTS, PAIRINGS, SIGNS, example_quartic,
                      example_sextic, pfister_coefficients, pfister_form, quartic_formula,
                      quartic_oracle, sextic_formula, sextic_oracle)
from .roundness import NotInvertibleElement, roundness_check, roundness_witness
from .snp import (NotCompositionType, bounded_witness_search, extension_value_classes,
                  snp_bruteforce)

__all__ = [
    "FiniteFieldTable", "INTERPRETATIONS", "LAYOUTS", "NotCompositionType",
    "NotInvertibleElement", "PAIRINGS", "SIGNS", "bounded_witness_search", "example_quartic",
    "example_sextic", "extension_value_classes", "field_table", "norm_map_agrees",
    "pfister_coefficients", "pfister_form", "primitive_polynomial", "quartic_formula",
    "quartic_oracle", "roundness_check", "roundness_witness", "sextic_formula",
    "sextic_oracle", "snp_bruteforce",
]
