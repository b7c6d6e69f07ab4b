"""Casimirs, the determinantal bracket, the 3x3 normal form and the singular surface of subregular slices."""

from .casimirs import RestrictedInvariant, determinantal_bracket, proportionality_constant, restrict_invariants
from .omega import OmegaForm, reduce_to_omega
from .surface import SingularSurfaceData, milnor_data, singular_surface
from .tables import GammaAction, SingularityTypeEntry, singularity_type_lookup

__all__ = [
    "GammaAction",
    "OmegaForm",
    "RestrictedInvariant",
    "SingularSurfaceData",
    "SingularityTypeEntry",
    "determinantal_bracket",
    "milnor_data",
    "proportionality_constant",
    "reduce_to_omega",
    "restrict_invariants",
    "singular_surface",
    "singularity_type_lookup",
]
