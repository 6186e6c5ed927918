"""Modular forms on Gamma_1(4) mod ell and Ramanujan congruences of their inverses."""

from __future__ import annotations

__version__ = "0.1.0"

from .arith import factor, is_prime, legendre
from .expr import FormExpr, parse
from .finder import (
    CongruenceReport,
    FinderConfig,
    SearchTarget,
    certify_nonzero_residue,
    certify_zero_residue,
    direct_check,
    frontend,
    full_search,
    sign_enumeration_search,
)
from .forms import CuspMonomial, GradedForm, filtration, fit, generator_series
from .qseries import QSeries, eta_quotient
from .tate import tate_cycle, validate_cycle

__all__ = [
    "QSeries", "eta_quotient", "CuspMonomial", "GradedForm", "generator_series",
    "fit", "filtration", "tate_cycle", "validate_cycle", "SearchTarget", "frontend",
    "full_search", "sign_enumeration_search", "direct_check", "certify_zero_residue",
    "certify_nonzero_residue", "FinderConfig", "CongruenceReport", "FormExpr", "parse",
    "factor", "is_prime", "legendre",
]
