"""Exact arithmetic over the rationals: polynomials, rational functions,
determinants and resultants."""
from fractions import Fraction

from .linalg import TermBudgetExceeded, det_exact, sylvester_matrix, sylvester_resultant
from .mpoly import DEFAULT_VARIABLES, BigRational, MPoly, mpoly_arith, mpoly_diff, mpoly_gcd
from .ratfunc import PoleError, RatFunc, eval_point, ratfunc_arith
from .unipoly import UniPoly

__all__ = [
    "BigRational", "DEFAULT_VARIABLES", "Fraction", "MPoly", "PoleError", "RatFunc",
    "TermBudgetExceeded", "UniPoly", "det_exact", "eval_point", "mpoly_arith",
    "mpoly_diff", "mpoly_gcd", "ratfunc_arith", "sylvester_matrix", "sylvester_resultant",
]
