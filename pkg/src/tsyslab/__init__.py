"""Exact T-functions, T-Q/T-T relations and Casorati solutions for twisted quantum affine algebras."""
from .beta import WeightPoly, beta_project, check_top_term
from .diffop import DiffOperator, TTable, build_L, t_table
from .grammar import PolySyntaxError, parse_poly
from .laurent import LaurentPoly, format_poly, y_to_q
from .reports import CheckReport
from .rootdata import AlgebraError, AlgebraSpec, make_algebra
from .shifts import Shift, canonicalize, theta_zero

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "AlgebraSpec", "CheckReport", "DiffOperator", "LaurentPoly", "PolySyntaxError",
    "Shift", "TTable", "WeightPoly", "beta_project", "build_L", "canonicalize", "check_top_term",
    "format_poly", "make_algebra", "parse_poly", "t_table", "theta_zero", "y_to_q",
]
