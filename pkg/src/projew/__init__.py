"""Exact symbolic engine for projective structures on a 2D chart.

Given polynomial connection coefficients it computes the projective
invariants and decides whether the pEW equation can have local solutions,
that is whether the class may contain a connection whose Ricci tensor is
skew.  All arithmetic is over Q or Q(x, y).
"""
from .exactmath import Fraction, MPoly, PoleError, RatFunc, UniPoly
from .exprparse import ParseError, StructureError, parse_expr, parse_structure
from .geometry import ChartConnection, TensorField, normalize_connection, shift_connection
from .obstruction import ObstructionReport, analyze
from .pipeline import Branch, branch, generic_coeffs, invariant_bundle, special_branch

__version__ = "0.1.0"

__all__ = [
    "Branch", "ChartConnection", "Fraction", "MPoly", "ObstructionReport", "ParseError",
    "PoleError", "RatFunc", "StructureError", "TensorField", "UniPoly", "analyze", "branch",
    "generic_coeffs", "invariant_bundle", "normalize_connection", "parse_expr",
    "parse_structure", "shift_connection", "special_branch",
]
