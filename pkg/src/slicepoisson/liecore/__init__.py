"""Lie algebra realizations, brackets, forms, centralizers and invariants."""

from .builders import build_realization, load_table, parse_table
from .realization import LieAlgebraRealization

__all__ = ["LieAlgebraRealization", "build_realization", "load_table", "parse_table"]
