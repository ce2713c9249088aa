"""Exact determinants and Sylvester resultants."""
from fractions import Fraction

from .mpoly import MPoly, mpoly_gcd
from .ratfunc import RatFunc
from .unipoly import UniPoly


class TermBudgetExceeded(RuntimeError):
    """A symbolic computation grew past the allowed number of terms."""

    def __init__(self, size, budget):
        self.size = size
        self.budget = budget
        super().__init__(f"intermediate expression has {size} terms, budget is {budget}")


def _size(v):
    if hasattr(v, "term_count"):
        return v.term_count()
    if isinstance(v, MPoly):
        return len(v)
    return 1


def det_exact(matrix, max_terms=None):
    """Determinant by fraction-free (Bareiss) elimination.

    Entries may be ``int``, ``Fraction`` or ``RatFunc``.  Rational-function
    matrices have each row's denominators cleared first, so elimination
    runs over the polynomial ring with exact division and only the final
    quotient is reduced.  A zero pivot is replaced by swapping in a lower
    row; if the whole column below is zero the determinant is zero.  With
    ``max_terms`` set, an intermediate entry larger than that raises
    :class:`TermBudgetExceeded`.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    if any(isinstance(v, RatFunc) for r in rows for v in r):
        return _det_ratfunc(rows, max_terms)
    rows = [[Fraction(v) if isinstance(v, int) else v for v in r] for r in rows]
    return _bareiss(rows, lambda num, den: num / den, Fraction(1), max_terms)


def _bareiss(rows, exact_div, one, max_terms):
    n = len(rows)
    sign = 1
    prev = one
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                v = rows[i][j] * pivot - rik * rows[k][j]
                if v != 0:
                    v = exact_div(v, prev)
                if max_terms is not None and _size(v) > max_terms:
                    raise TermBudgetExceeded(_size(v), max_terms)
                rows[i][j] = v
            rows[i][k] = one * 0
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign > 0 else -det


def _det_ratfunc(rows, max_terms):
    variables = next(v.variables for r in rows for v in r if isinstance(v, RatFunc))
    one = MPoly.constant(1, variables)
    scale = one
    poly_rows = []
    for r in rows:
        r = [v if isinstance(v, RatFunc) else RatFunc.constant(v, variables) for v in r]
        L = one
        for v in r:
            if not v.den.is_constant():
                L = L * v.den.exact_div(mpoly_gcd(L, v.den))
        poly_rows.append([v.num * L.exact_div(v.den) for v in r])
        scale = scale * L
    det = _bareiss(poly_rows, lambda num, den: num.exact_div(den), one, max_terms)
    return RatFunc(det, scale)


def sylvester_matrix(p, q):
    """Sylvester matrix of ``p`` and ``q``, coefficients in descending degree.

    The first ``deg q`` rows hold shifted copies of ``p``'s coefficients,
    the remaining ``deg p`` rows hold ``q``'s.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = p.degree, q.degree
    if m < 1 or n < 1:
        raise ValueError("resultant needs both degrees >= 1")
    size = m + n
    zero = p.leading_coeff() * 0
    rows = []
    for band, count in ((p.descending(), n), (q.descending(), m)):
        for i in range(count):
            row = [zero] * size
            row[i:i + len(band)] = band
            rows.append(row)
    return rows


def sylvester_resultant(p: UniPoly, q: UniPoly, max_terms=None):
    """Resultant of two univariate polynomials via the Sylvester determinant."""
    return det_exact(sylvester_matrix(p, q), max_terms=max_terms)
