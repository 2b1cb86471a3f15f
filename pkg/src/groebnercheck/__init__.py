"""Exact Groebner-basis toolkit with scripted checks of published polynomial systems."""

from .analyze import (
    INFINITE,
    LeadingTermSet,
    is_zero_dimensional,
    leading_terms,
    real_root_count,
    standard_monomials,
)
from .cases import CaseReport, Diff, RationalForm, rational_difference_numerator, run_case, solve_linear_in
from .groebner import GroebnerBasis, Limits, buchberger, normal_form, radical_member, s_polynomial
from .modular import gb_mod_p, sample_structure, skeleton
from .parse import load_system, parse_poly, parse_system, print_poly
from .poly import (
    Polynomial,
    TermOrder,
    VariableTable,
    bidegree,
    conjugate,
    dehomogenize,
    exact_divide,
    specialize,
)
from .variety import brute_force, variety_covered

__version__ = "0.1.0"

__all__ = [
    "INFINITE", "LeadingTermSet", "is_zero_dimensional", "leading_terms", "real_root_count",
    "standard_monomials", "CaseReport", "Diff", "RationalForm", "rational_difference_numerator",
    "run_case", "solve_linear_in", "GroebnerBasis", "Limits", "buchberger", "normal_form",
    "radical_member", "s_polynomial", "gb_mod_p", "sample_structure", "skeleton", "load_system",
    "parse_poly", "parse_system", "print_poly", "Polynomial", "TermOrder", "VariableTable",
    "bidegree", "conjugate", "dehomogenize", "exact_divide", "specialize", "brute_force",
    "variety_covered",
]
