"""Exact arithmetic kernel: fields, polynomials, extensions, matrices."""

from .ext import QElem, QuotientRing, SimpleExt, ext_arith, quadratic_ring
from .fields import GF, QQ, Field, FieldMismatch, ModInt, NotInvertible, PrimeField, \
    field_from_descriptor
from .identity import blackbox_identity_test, failure_bound, identity_test
from .irreducible import is_irreducible
from .matrix import RingMatrix, SingularMatrix, companion, det
from .poly import SparsePoly, poly_arith, poly_eval

__all__ = [
    "GF", "QQ", "Field", "FieldMismatch", "ModInt", "NotInvertible", "PrimeField",
    "QElem", "QuotientRing", "RingMatrix", "SimpleExt", "SingularMatrix", "SparsePoly",
    "blackbox_identity_test", "companion", "det", "ext_arith", "failure_bound",
    "field_from_descriptor", "identity_test", "is_irreducible", "poly_arith",
    "poly_eval", "quadratic_ring",
]
