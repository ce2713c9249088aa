"""Random generators and example loaders shared by the test modules."""
import json
from fractions import Fraction
from itertools import permutations
from pathlib import Path

from projew.exactmath import MPoly, RatFunc
from projew.exprparse import parse_structure
from projew.geometry import ChartConnection, TensorField

EXAMPLES = Path(__file__).resolve().parent.parent / "examples"


def random_mpoly(rng, deg, density=0.6, num=5, den=3, variables=("x", "y")):
    terms = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            if rng.random() < density:
                terms[(i, j)] = Fraction(rng.randint(-num, num), rng.randint(1, den))
    return MPoly(terms, variables)


def random_ratfunc(rng, deg, **kw):
    return RatFunc.from_poly(random_mpoly(rng, deg, **kw))


def random_connection(rng, deg=1, density=0.6):
    entries = {}
    for c in range(2):
        for a in range(2):
            for b in range(a, 2):
                entries[(c, a, b)] = random_ratfunc(rng, deg, density=density)
    return ChartConnection(entries)


def random_covector(rng, deg=2):
    return TensorField.covector([random_ratfunc(rng, deg), random_ratfunc(rng, deg)])


def load_example(name):
    return parse_structure((EXAMPLES / name).read_text(encoding="utf-8"))


def structure_text(entries, **extra):
    return json.dumps({"connection": entries, **extra})


def cofactor_det(m):
    """Permutation-expansion determinant; independent of the elimination code."""
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= m[i][j]
            if not prod:
                break
        total += -prod if inv % 2 else prod
    return total
