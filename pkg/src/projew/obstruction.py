"""Constraint polynomials, their even reductions, the resultant matrices,
and the final obstruction report."""
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import PoleError, RatFunc, TermBudgetExceeded, UniPoly, det_exact
from .pipeline import (
    Branch,
    BranchError,
    branch,
    generic_coeffs,
    invariant_bundle,
    special_branch,
)


@dataclass(frozen=True)
class PTriple:
    P1: UniPoly
    P2: UniPoly
    P3: UniPoly


@dataclass(frozen=True)
class QTriple:
    Q1: UniPoly
    Q2: UniPoly
    Q3: UniPoly


@dataclass(frozen=True)
class ResultantTriple:
    Q12: object
    Q23: object
    Q13: object

    def as_dict(self):
        return {"Q12": self.Q12, "Q23": self.Q23, "Q13": self.Q13}

    def any_nonzero(self):
        return any(v != 0 for v in self.as_dict().values())


def _zero_like(v):
    return v * 0


def p_polynomials(coeffs, rho):
    """P1 (deg 6), P2 (deg 8) and P3 (deg 6) in the indeterminate t standing for F."""
    z = _zero_like(rho)
    k = lambda n: z + n  # noqa: E731
    c = coeffs
    P1 = UniPoly([c.a3, rho * -9, c.a2, z, c.a1, z, k(-90)])
    P2 = UniPoly([c.b3, z, c.b2, rho * 20, c.b1, z, z, z, k(-275)])
    P3 = UniPoly([c.c3, rho, c.c2, z, c.c1, z, k(-40)])
    return PTriple(P1, P2, P3)


def q_polynomials(coeffs):
    """Q1, Q2, Q3 in X = t², free of the odd-degree term."""
    a1, a2, a3 = coeffs.a1, coeffs.a2, coeffs.a3
    b1, b2, b3 = coeffs.b1, coeffs.b2, coeffs.b3
    c1, c2, c3 = coeffs.c1, coeffs.c2, coeffs.c3
    z = _zero_like(a1)
    r = Fraction(20, 9)
    Q1 = UniPoly.from_descending([z + 525, c1 * -20, b1 - c2 * 20, b2 - c3 * 20, b3], "X")
    Q2 = UniPoly.from_descending([z + 450, -(c1 * 9 + a1), -(c2 * 9 + a2), -(c3 * 9 + a3)], "X")
    Q3 = UniPoly.from_descending([z + 475, -(a1 * r), -(a2 * r + b1), -(a3 * r + b2), -b3], "X")
    return QTriple(Q1, Q2, Q3)


def q_from_p(p):
    """Derive the Q-triple from the P-triple by eliminating the odd term.

    Raises ``ValueError`` if an odd power survives.
    """
    t2 = UniPoly([0, 0, 1])
    q1 = p.P3 * t2 * -20 + p.P2
    q2 = p.P3 * -9 - p.P1
    q3 = p.P1 * t2 * Fraction(-20, 9) - p.P2
    return QTriple(*(q.even_part_in_square("X") for q in (q1, q2, q3)))


def _banded(row, count, width, zero):
    out = []
    for i in range(count):
        r = [zero] * width
        r[i:i + len(row)] = row
        out.append(r)
    return out


def obstruction_matrices(q):
    """The three obstruction matrices, each a banded Sylvester layout.

    Q12: three shifted rows of Q1 then four of Q2 (7x7).
    Q23: four rows of Q2 then three of Q3 (7x7).
    Q13: four rows of Q1 then four of Q3 (8x8).
    """
    r1, r2, r3 = q.Q1.descending(), q.Q2.descending(), q.Q3.descending()
    if (len(r1), len(r2), len(r3)) != (5, 4, 5):
        raise ValueError("Q1, Q2, Q3 must have degrees 4, 3, 4")
    zero = _zero_like(r1[0])
    return {
        "Q12": _banded(r1, 3, 7, zero) + _banded(r2, 4, 7, zero),
        "Q23": _banded(r2, 4, 7, zero) + _banded(r3, 3, 7, zero),
        "Q13": _banded(r1, 4, 8, zero) + _banded(r3, 4, 8, zero),
    }


def q_resultants(q, max_terms=None):
    """Determinants of the three obstruction matrices."""
    mats = obstruction_matrices(q)
    return ResultantTriple(**{name: det_exact(m, max_terms=max_terms) for name, m in mats.items()})


# -- reports -------------------------------------------------------------

NO_SOLUTION = "no local pEW solution"


@dataclass
class ObstructionReport:
    """Outcome of analysing one projective structure.

    ``payload`` values are exact field elements (``Fraction``, ``RatFunc``)
    or lists of them; rendering to text or JSON happens in :mod:`projew.report`.
    """
    name: str
    branch: Branch
    invariants: dict
    payload: dict = field(default_factory=dict)
    point: tuple = None
    verdict: str = ""
    notes: list = field(default_factory=list)


def _evaluated(v, point):
    return v.evaluate(point) if point is not None and hasattr(v, "evaluate") else v


def analyze(conn, at=None, symbolic=False, max_terms=100000, name=None):
    """Run the full pipeline on ``conn`` and return an :class:`ObstructionReport`.

    Generic branch: without ``at`` and without ``symbolic`` only the
    invariants are reported.  With ``symbolic`` the nine coefficients and
    the three determinants are computed over ℚ(x, y), subject to
    ``max_terms``; with ``at`` they are computed at that point.
    """
    bundle = invariant_bundle(conn)
    br = branch(bundle)
    invariants = {"rho": bundle.rho, "phi": bundle.phi, "ell": bundle.ell,
                  "Y": bundle.Y.as_list(), "Yup": bundle.Yup.as_list(), "W": bundle.Wup.as_list()}
    report = ObstructionReport(name if name is not None else conn.name, br, invariants, point=at)
    if at is not None:
        report.invariants = {k: ([_evaluated(x, at) for x in v] if isinstance(v, list) else _evaluated(v, at))
                             for k, v in invariants.items()}

    if br is Branch.FLAT:
        zero = Fraction(0)
        report.payload = {"obstructions": {"Q12": zero, "Q23": zero, "Q13": zero}}
        report.verdict = "projectively flat; F = 0 forced, no obstruction"
        return report

    if br is Branch.SPECIAL:
        sb = special_branch(bundle)
        payload = {"f": sb.f, "h": sb.h, "k": sb.k, "m": sb.m,
                   "quartic": sb.quartic, "quadratic": sb.quadratic,
                   "obstruction": sb.obstruction}
        if at is not None:
            payload["obstruction_at_point"] = sb.obstruction.evaluate(at)
        report.payload = payload
        if sb.obstruction.is_zero():
            report.verdict = "obstruction vanishes identically; no conclusion"
        elif at is not None and payload["obstruction_at_point"] == 0:
            report.verdict = ("obstruction vanishes at the point; "
                              f"{NO_SOLUTION} on open sets where it is nonzero")
        else:
            report.verdict = NO_SOLUTION
        return report

    # generic branch
    report.notes.append(
        "results hold off the zero set of rho's numerator: " + str(bundle.rho.num))
    if at is None and not symbolic:
        report.verdict = "undetermined: pass an evaluation point or request symbolic output"
        return report
    coeffs = generic_coeffs(bundle, at=at)
    rho = bundle.rho.evaluate(at) if at is not None else bundle.rho
    ptrip = p_polynomials(coeffs, rho)
    qtrip = q_polynomials(coeffs)
    res = q_resultants(qtrip, max_terms=None if at is not None else max_terms)
    if at is None:
        for v in list(coeffs.as_dict().values()) + list(res.as_dict().values()):
            if isinstance(v, RatFunc) and v.term_count() > max_terms:
                raise TermBudgetExceeded(v.term_count(), max_terms)
    report.payload = {"coefficients": coeffs.as_dict(), "P": ptrip, "Q": qtrip,
                      "obstructions": res.as_dict()}
    if res.any_nonzero():
        report.verdict = NO_SOLUTION if at is None else f"{NO_SOLUTION} near the point"
    else:
        report.verdict = "all obstructions vanish; no conclusion"
    return report


__all__ = [
    "NO_SOLUTION", "ObstructionReport", "PTriple", "PoleError", "QTriple", "ResultantTriple",
    "BranchError", "analyze", "p_polynomials", "obstruction_matrices", "q_from_p", "q_polynomials",
    "q_resultants",
]
