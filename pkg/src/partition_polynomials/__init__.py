"""Partition polynomials P_n(x) and certified checks of inequalities between them.

P_n(k) counts the k-colored partitions of n. The package builds P_n exactly, isolates
real roots of polynomials derived from it, and sweeps the Bessenrodt-Ono type
inequalities with exact or interval-certified comparisons.
"""

__version__ = "1.0.0"

from .config import ConfigPresets, RunConfig, Suite, SweepSizes, apply_environment_overrides
from .exactnum import Poly, format_decimal, parse_rational, sigma
from .partpoly import (
    PolyCache,
    bo_poly,
    build_cache,
    colored_counts_oracle,
    delta,
    derivative_formula,
    prop7_poly,
    tilde_poly,
)
from .roots import (
    all_roots_float,
    isolate_real_roots,
    largest_positive_real_root,
    positive_beyond,
    refine,
    root_census,
    squarefree_part,
)
from .verify import ReportStatus, VerificationReport, run_suite

__all__ = [
    "Poly",
    "PolyCache",
    "build_cache",
    "colored_counts_oracle",
    "derivative_formula",
    "delta",
    "bo_poly",
    "prop7_poly",
    "tilde_poly",
    "squarefree_part",
    "isolate_real_roots",
    "refine",
    "root_census",
    "largest_positive_real_root",
    "positive_beyond",
    "all_roots_float",
    "VerificationReport",
    "ReportStatus",
    "run_suite",
    "ConfigPresets",
    "RunConfig",
    "Suite",
    "SweepSizes",
    "apply_environment_overrides",
    "format_decimal",
    "parse_rational",
    "sigma",
]
