from fractions import Fraction as Q

import pytest
import sympy as sp

from projew.exactmath import RatFunc, UniPoly, sylvester_matrix, sylvester_resultant
from projew.geometry import ChartConnection
from projew.obstruction import (
    NO_SOLUTION,
    analyze,
    p_polynomials,
    obstruction_matrices,
    q_from_p,
    q_polynomials,
    q_resultants,
)
from projew.pipeline import Branch, GenericCoeffs, generic_coeffs, invariant_bundle

ONE = (1, 1)
NAMES = ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3")
PAIRS = {"Q12": ("Q1", "Q2"), "Q23": ("Q2", "Q3"), "Q13": ("Q1", "Q3")}

REFERENCE_P = {
    "P1": {6: -90, 4: Q(185760, 328), 2: Q(-528608, 328), 1: -2952, 0: Q(-134912, 328)},
    "P2": {8: -275, 4: Q(13774080, 2952), 3: 6560, 2: Q(-601856, 8856), 0: Q(523957248, 26568)},
    "P3": {6: -40, 4: Q(30960, 328), 2: Q(125360, 984), 1: 328, 0: Q(31603200, 26568)},
}
DETS = {
    "Q12": Q(-1457890459574161592339200000, 1681),
    "Q23": Q(1457890459574161592339200000, 1681),
    "Q13": Q(-188610437798501965389961756672000000000, 452190681),
}


def zero_coeffs():
    return GenericCoeffs(*[Q(0)] * 9)


def random_coeffs(rng):
    return GenericCoeffs(*[Q(rng.randint(-60, 60), rng.randint(1, 7)) for _ in NAMES])


@pytest.fixture(scope="module")
def ex1_point(ex1):
    b = invariant_bundle(ex1)
    return generic_coeffs(b, at=ONE), b.rho.evaluate(ONE)


def test_p_polynomials_match_reference(ex1_point):
    coeffs, rho = ex1_point
    p = p_polynomials(coeffs, rho)
    for name, expected in REFERENCE_P.items():
        poly = getattr(p, name)
        assert {k: c for k, c in enumerate(poly.coeffs) if c != 0} == expected


def test_p_polynomials_zero_coefficients():
    p = p_polynomials(zero_coeffs(), Q(0))
    assert str(p.P1) == "-90*t^6"
    assert str(p.P2) == "-275*t^8"
    assert str(p.P3) == "-40*t^6"


def test_q_polynomials_zero_coefficients():
    q = q_polynomials(zero_coeffs())
    assert q.Q1 == UniPoly.from_descending([525, 0, 0, 0, 0], "X")
    assert q.Q2 == UniPoly.from_descending([450, 0, 0, 0], "X")
    assert q.Q3 == UniPoly.from_descending([475, 0, 0, 0, 0], "X")


def test_q2_example_coefficient(ex1_point):
    coeffs, _ = ex1_point
    q = q_polynomials(coeffs)
    # -(9 c1 + a1) at the point (1, 1)
    assert q.Q2.coeff(2) == Q(-58050, 41)


def test_q_from_p_agrees_with_closed_form(rng, ex1_point):
    sets = [ex1_point] + [(random_coeffs(rng), Q(rng.randint(-9, 9))) for _ in range(10)]
    for coeffs, rho in sets:
        assert q_from_p(p_polynomials(coeffs, rho)) == q_polynomials(coeffs)


def test_odd_term_cancels(rng):
    t2 = UniPoly([0, 0, 1])
    for _ in range(5):
        coeffs = random_coeffs(rng)
        p = p_polynomials(coeffs, Q(rng.randint(-9, 9)))
        q = q_polynomials(coeffs)
        assert (q.Q1.compose_square() + t2 * p.P3 * 20 - p.P2).is_zero()


def test_q_from_p_rejects_odd_leftovers():
    p = p_polynomials(zero_coeffs(), Q(1))
    broken = type(p)(p.P1 + UniPoly([0, 1]), p.P2, p.P3)
    with pytest.raises(ValueError):
        q_from_p(broken)


def test_resultants_match_reference(ex1_point):
    coeffs, _ = ex1_point
    assert q_resultants(q_polynomials(coeffs)).as_dict() == DETS


def test_resultants_zero_coefficients():
    # Every Q is a monomial in X, so each pair shares the root X = 0.
    res = q_resultants(q_polynomials(zero_coeffs()))
    assert not res.any_nonzero()


def test_obstruction_matrix_shapes(rng):
    mats = obstruction_matrices(q_polynomials(random_coeffs(rng)))
    assert [len(mats[k]) for k in ("Q12", "Q23", "Q13")] == [7, 7, 8]
    assert all(len(r) == len(m) for m in mats.values() for r in m)


def test_obstruction_matrices_are_sylvester(rng):
    for _ in range(5):
        q = q_polynomials(random_coeffs(rng))
        mats = obstruction_matrices(q)
        for name, (i, j) in PAIRS.items():
            assert mats[name] == sylvester_matrix(getattr(q, i), getattr(q, j))


def test_resultants_against_sympy(rng):
    X = sp.Symbol("X")
    for _ in range(5):
        q = q_polynomials(random_coeffs(rng))
        res = q_resultants(q).as_dict()
        for name, (i, j) in PAIRS.items():
            f, g = (sp.Poly([sp.Rational(c.numerator, c.denominator) for c in getattr(q, n).descending()], X)
                    for n in (i, j))
            assert sp.resultant(f, g) == sp.Rational(res[name].numerator, res[name].denominator)


def test_symbolic_resultant_entries():
    x = RatFunc.var("x")
    coeffs = GenericCoeffs(*([x] + [RatFunc.constant(k) for k in range(1, 9)]))
    q = q_polynomials(coeffs)
    res = q_resultants(q)
    for name, (i, j) in PAIRS.items():
        expected = sylvester_resultant(getattr(q, i), getattr(q, j))
        assert getattr(res, name) == expected
        assert getattr(res, name).evaluate((2, 0)) == sylvester_resultant(
            getattr(q, i).evaluate_coeffs((2, 0)), getattr(q, j).evaluate_coeffs((2, 0)))


# -- reports -----------------------------------------------------------------

def test_analyze_generic_at_point(ex1):
    rep = analyze(ex1, at=ONE)
    assert rep.branch is Branch.GENERIC
    assert rep.invariants["rho"] == 328
    assert rep.payload["obstructions"] == DETS
    assert rep.verdict == f"{NO_SOLUTION} near the point"
    assert any("zero set" in n for n in rep.notes)


def test_analyze_generic_without_point(ex1):
    rep = analyze(ex1)
    assert rep.verdict.startswith("undetermined")
    assert "obstructions" not in rep.payload


def test_analyze_special(ex2):
    rep = analyze(ex2)
    assert rep.branch is Branch.SPECIAL
    assert rep.verdict == NO_SOLUTION
    assert rep.payload["obstruction"].evaluate((0, 0)) == 27200
    rep = analyze(ex2, at=(0, 5))
    assert rep.payload["obstruction_at_point"] == 27200


def test_analyze_flat(flat):
    rep = analyze(flat, at=(3, 4))
    assert rep.branch is Branch.FLAT
    assert all(v == 0 for v in rep.payload["obstructions"].values())
    assert rep.invariants["rho"] == 0 and rep.invariants["Y"] == [0, 0]
    assert "flat" in rep.verdict


def test_analyze_uses_given_name():
    assert analyze(ChartConnection.flat(), name="plane").name == "plane"


def test_resultant_relations(rng, ex1_point):
    # Q1 + Q3 = (20/9) X Q2, which ties the three determinants together.
    sets = [ex1_point[0]] + [random_coeffs(rng) for _ in range(10)]
    for coeffs in sets:
        q = q_polynomials(coeffs)
        assert q.Q1 + q.Q3 == q.Q2.shift(1) * Q(20, 9)
        res = q_resultants(q)
        assert res.Q23 == -res.Q12
        assert res.Q13 == Q(20, 9) ** 4 * coeffs.b3 * res.Q12
