import random
from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from helpers import cofactor_det, random_mpoly
from projew.exactmath import (
    MPoly,
    PoleError,
    RatFunc,
    UniPoly,
    det_exact,
    eval_point,
    mpoly_arith,
    mpoly_diff,
    mpoly_gcd,
    ratfunc_arith,
    sylvester_matrix,
    sylvester_resultant,
)

x = MPoly.var("x")
y = MPoly.var("y")
X, Y = sympy.symbols("x y")


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * X**i * Y**j
                for (i, j), c in p.terms.items()), sympy.Integer(0))


def from_sympy(expr):
    poly = sympy.Poly(expr, X, Y)
    return MPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


mpolys = st.builds(
    lambda terms: MPoly(terms),
    st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        st.fractions(min_value=-20, max_value=20, max_denominator=6),
        max_size=6,
    ),
)


# -- MPoly -------------------------------------------------------------------

def test_difference_of_squares():
    assert mpoly_arith(x + y, x - y, "mul") == x**2 - y**2


def test_additive_identity():
    p = x**2 * y - Fraction(3, 2) * x + 7
    assert mpoly_arith(p, MPoly(), "add") == p


def test_square_of_monomial():
    assert (x * y) * (x * y) == MPoly({(2, 2): 1})


def test_variable_mismatch_rejected():
    with pytest.raises(ValueError):
        x + MPoly.var("u", ("u", "v"))


@pytest.mark.parametrize("p, var, expected", [
    (x * y, "x", y),
    (MPoly.constant(5), "y", MPoly()),
    (x**2 * Fraction(-1, 6), "x", x * Fraction(-1, 3)),
])
def test_diff_examples(p, var, expected):
    assert mpoly_diff(p, var) == expected


def test_diff_unknown_variable():
    with pytest.raises(ValueError, match="unknown variable"):
        mpoly_diff(x * y, "z")


def test_grlex_printing():
    assert str(y**3 + x * y + x**2 - 1) == "y^3 + x^2 + x*y - 1"
    assert str(Fraction(-1, 6) * x**2) == "-1/6*x^2"


@settings(max_examples=60, deadline=None)
@given(mpolys, mpolys, mpolys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == MPoly()


@settings(max_examples=60, deadline=None)
@given(mpolys, mpolys)
def test_leibniz(p, q):
    for v in ("x", "y"):
        assert (p * q).diff(v) == p * q.diff(v) + q * p.diff(v)


# -- gcd ---------------------------------------------------------------------

def test_gcd_examples():
    assert mpoly_gcd(x**2 - y**2, x - y) == x - y
    p = 3 * x * y - 6
    assert mpoly_gcd(p, MPoly()) == x * y - 2
    assert mpoly_gcd(MPoly.constant(3), MPoly.constant(6)) == MPoly.constant(1)


def test_gcd_against_sympy():
    rng = random.Random(7)
    for _ in range(40):
        g = random_mpoly(rng, rng.randint(0, 3))
        a = random_mpoly(rng, rng.randint(0, 4)) * g
        b = random_mpoly(rng, rng.randint(0, 4)) * g
        ours = mpoly_gcd(a, b)
        if a.is_zero() and b.is_zero():
            assert ours.is_zero()
            continue
        ref = sympy.gcd(to_sympy(a), to_sympy(b))
        ref_poly = from_sympy(ref)
        # same up to a rational unit
        unit = ref_poly.leading_coeff() / ours.leading_coeff()
        assert ours.scale(unit) == ref_poly


def test_gcd_of_large_coprime_inputs():
    rng = random.Random(11)
    a = random_mpoly(rng, 9, density=0.9) * random_mpoly(rng, 3, density=0.9)
    b = random_mpoly(rng, 10, density=0.9)
    shared = x**2 * y - 3 * y + 1
    assert mpoly_gcd(a * shared, b * shared) == shared


# -- RatFunc -----------------------------------------------------------------

def test_ratfunc_examples():
    assert ratfunc_arith(RatFunc(x, y), RatFunc(y, x), "mul") == 1
    a = RatFunc(x**2 + 1, x * y - 3)
    assert ratfunc_arith(a, a, "sub") == 0
    r = RatFunc(x**2 - y**2, x - y)
    assert r.num == x + y and r.den == 1


def test_ratfunc_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(RatFunc(x), RatFunc(MPoly()), "div")


def test_ratfunc_canonical_denominator():
    r = RatFunc(x, -2 * y - 4)
    assert r.den == y + 2
    assert r.num == x * Fraction(-1, 2)
    assert RatFunc(2 * x, 4 * x) == Fraction(1, 2)


def test_ratfunc_equality_is_cross_multiplication():
    rng = random.Random(3)
    for _ in range(20):
        a, b, c = (random_mpoly(rng, 2) + 1 for _ in range(3))
        if b.is_zero() or c.is_zero():
            continue
        assert RatFunc(a * c, b * c) == RatFunc(a, b)


@settings(max_examples=40, deadline=None)
@given(mpolys, mpolys)
def test_canonical_form_idempotent(a, b):
    if b.is_zero():
        return
    r = RatFunc(a, b)
    once = r.normalize()
    assert once.num == r.num and once.den == r.den
    assert RatFunc(once.num, once.den).num == once.num


@settings(max_examples=40, deadline=None)
@given(mpolys, mpolys, mpolys)
def test_ratfunc_field_identities(a, b, c):
    if b.is_zero() or c.is_zero():
        return
    p, q = RatFunc(a, b), RatFunc(b, c)
    assert (p + q) - q == p
    assert (p * q) / q == p
    assert (p + q).diff("x") == p.diff("x") + q.diff("x")


def test_eval_point():
    assert eval_point(RatFunc(x * y), (1, 1)) == 1
    assert eval_point(RatFunc(x, y + 1), (Fraction(1, 2), 3)) == Fraction(1, 8)
    with pytest.raises(PoleError) as info:
        eval_point(RatFunc(x, x - 1), (1, 1))
    assert info.value.denominator == x - 1


# -- determinants and resultants --------------------------------------------

def test_identity_determinant():
    eye = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    assert det_exact(eye) == 1


def test_symbolic_2x2():
    a, b, c, d = (RatFunc(v) for v in (x, y, x * y, x + 1))
    assert det_exact([[a, b], [c, d]]) == a * d - b * c


def test_det_matches_cofactor_expansion():
    rng = random.Random(5)
    for trial in range(50):
        n = 1 + trial % 6
        m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if rng.random() < 0.8 else Fraction(0)
              for _ in range(n)] for _ in range(n)]
        assert det_exact(m) == cofactor_det(m)


def test_det_with_zero_leading_pivot():
    m = [[0, 1, 2], [3, 0, 1], [1, 1, 0]]
    assert det_exact(m) == cofactor_det([[Fraction(v) for v in r] for r in m]) == 7


def test_symbolic_det_matches_cofactor_expansion():
    rng = random.Random(9)
    for n in (2, 3, 4):
        m = [[RatFunc(random_mpoly(rng, 1) + 1, random_mpoly(rng, 1) + 2) for _ in range(n)]
             for _ in range(n)]
        ref = RatFunc(MPoly())
        for perm in permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            prod = RatFunc(MPoly.constant(1))
            for i, j in enumerate(perm):
                prod = prod * m[i][j]
            ref = ref - prod if inv % 2 else ref + prod
        assert det_exact(m) == ref


def uni(*coeffs):
    """Polynomial from descending coefficients."""
    return UniPoly.from_descending([Fraction(c) for c in coeffs])


def test_resultant_examples():
    assert sylvester_resultant(uni(1, -1), uni(1, 1)) == 2
    assert sylvester_resultant(uni(1, 0, 0), uni(1, 0, 0, 0)) == 0


def test_resultant_of_linear_factor_is_evaluation():
    rng = random.Random(2)
    for _ in range(20):
        c = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
        q = UniPoly([Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(2, 6))] + [Fraction(1)])
        assert sylvester_resultant(uni(1, -c), q) == q(c)


def test_resultant_rejects_zero_polynomial():
    with pytest.raises(ValueError):
        sylvester_resultant(UniPoly([]), uni(1, 2))
    with pytest.raises(ValueError):
        sylvester_matrix(uni(3), uni(1, 2))


def _as_mpoly(p):
    return MPoly({(k, 0): c for k, c in enumerate(p.coeffs)})


def test_resultant_zero_iff_common_factor():
    rng = random.Random(13)
    seen = {True: 0, False: 0}
    for trial in range(50):
        def rand_poly(deg):
            cs = [Fraction(rng.randint(-4, 4)) for _ in range(deg)] + [Fraction(rng.choice([-3, -1, 1, 2]))]
            return UniPoly(cs)
        if trial % 2:
            shared = rand_poly(rng.randint(1, 2))
            p = shared * rand_poly(rng.randint(0, 3))
            q = shared * rand_poly(rng.randint(0, 3))
        else:
            p = rand_poly(rng.randint(1, 5))
            q = rand_poly(rng.randint(1, 5))
        common = mpoly_gcd(_as_mpoly(p), _as_mpoly(q)).total_degree() > 0
        assert (sylvester_resultant(p, q) == 0) == common
        seen[common] += 1
    assert seen[True] >= 20 and seen[False] >= 10
