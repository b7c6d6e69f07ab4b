"""Dirac reduction of the Lie-Poisson structure to slices."""

from .general import GeneralOrbitReport, morozov_triple, reduce_general_orbit
from .presentation import (
    JacobiResult,
    PoissonPresentation,
    QuasiHomogeneityResult,
    check_jacobi,
    check_quasihomogeneous,
    generic_rank,
    quasi_degree_profile,
)
from .reduction import assemble_ABC, assemble_blocks, c_determinant, dirac_reduce, numeric_agreement, reduce_chart

__all__ = [
    "GeneralOrbitReport",
    "JacobiResult",
    "PoissonPresentation",
    "QuasiHomogeneityResult",
    "assemble_ABC",
    "assemble_blocks",
    "c_determinant",
    "check_jacobi",
    "check_quasihomogeneous",
    "dirac_reduce",
    "generic_rank",
    "morozov_triple",
    "numeric_agreement",
    "quasi_degree_profile",
    "reduce_chart",
    "reduce_general_orbit",
]
