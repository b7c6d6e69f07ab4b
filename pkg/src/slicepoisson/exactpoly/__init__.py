"""Exact polynomial arithmetic, polynomial matrices, elimination and Groebner bases."""

from .elimination import eliminate_linear, substitute_back
from .groebner import groebner_basis, groebner_quotient_basis, normal_form, standard_monomials
from .linalg import charpoly
from .poly import MultiPoly, Rational, WeightVector, as_rational, is_quasi_homogeneous, qdegree
from .polymatrix import PolyMatrix, adjugate, determinant, poly_matrix_inverse_unit_det

__all__ = [
    "MultiPoly",
    "PolyMatrix",
    "Rational",
    "WeightVector",
    "adjugate",
    "as_rational",
    "charpoly",
    "determinant",
    "eliminate_linear",
    "groebner_basis",
    "groebner_quotient_basis",
    "is_quasi_homogeneous",
    "normal_form",
    "poly_matrix_inverse_unit_det",
    "qdegree",
    "standard_monomials",
    "substitute_back",
]
