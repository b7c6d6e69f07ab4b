"""Exact computation of transverse Poisson structures on slices to nilpotent orbits."""

__version__ = "0.1.0"
