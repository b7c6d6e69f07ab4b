"""Job configuration, pipeline, fixture verification and report rendering."""

from .config import JobConfig, load_config, parse_config
from .golden import VerifySummary, compute_items, verify_fixtures
from .latex import emit_latex, matrix_latex, poly_latex
from .main import main
from .pipeline import run
from .report import Report

__all__ = [
    "JobConfig",
    "Report",
    "VerifySummary",
    "compute_items",
    "emit_latex",
    "load_config",
    "main",
    "matrix_latex",
    "parse_config",
    "poly_latex",
    "run",
    "verify_fixtures",
]
