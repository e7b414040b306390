"""Exact arithmetic substrate: polynomials, rational functions, series, linear solving."""

from .poly import MultiPoly, NotDivisible, exact_divide, parse, var, const
from .ratfunc import RationalFunction, laurent_p
from .series import TruncatedSeries, NotAUnit, series_invert
from .linalg import solve_linear_exact, Inconsistent, Underdetermined
from .variables import VARIABLES

__all__ = [
    "MultiPoly", "NotDivisible", "exact_divide", "parse", "var", "const",
    "RationalFunction", "laurent_p", "TruncatedSeries", "NotAUnit", "series_invert",
    "solve_linear_exact", "Inconsistent", "Underdetermined", "VARIABLES",
]
