"""Bivariate polynomials over the rationals."""
from fractions import Fraction
from math import lcm
from types import MappingProxyType

from . import _dense

BigRational = Fraction

DEFAULT_VARIABLES = ("x", "y")


def _grlex_key(exp):
    i, j = exp
    return (i + j, i, j)


def _coerce_scalar(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class MPoly:
    """Immutable polynomial in two chart variables with ``Fraction`` coefficients.

    Terms are stored as ``{(i, j): coeff}`` meaning ``coeff * v0**i * v1**j``
    with no zero coefficients.  Ordering for printing and "leading term"
    is graded lexicographic with ``v0 > v1``.
    """

    __slots__ = ("_terms", "variables", "_hash")

    def __init__(self, terms=None, variables=DEFAULT_VARIABLES):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _coerce_scalar(c)
                if c:
                    i, j = exp
                    if i < 0 or j < 0:
                        raise ValueError(f"negative exponent {exp!r}")
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self.variables = tuple(variables)
        self._hash = None

    @classmethod
    def _raw(cls, terms, variables):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.variables = variables
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, variables=DEFAULT_VARIABLES):
        return cls({(0, 0): c}, variables)

    @classmethod
    def var(cls, name, variables=DEFAULT_VARIABLES):
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}; chart variables are {variables}")
        return cls({(1, 0) if name == variables[0] else (0, 1): 1}, variables)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def constant_term(self):
        return self._terms.get((0, 0), Fraction(0))

    def total_degree(self):
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def degree(self, var):
        k = self._var_index(var)
        if not self._terms:
            return -1
        return max(exp[k] for exp in self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            return None
        return max(self._terms.items(), key=lambda t: _grlex_key(t[0]))

    def leading_coeff(self):
        lt = self.leading_term()
        return Fraction(0) if lt is None else lt[1]

    def __len__(self):
        return len(self._terms)

    def _var_index(self, var):
        if isinstance(var, int):
            if var in (0, 1):
                return var
        elif var in self.variables:
            return self.variables.index(var)
        raise ValueError(f"unknown variable {var!r}; chart variables are {self.variables}")

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()}, self.variables)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        for (i2, j2), c2 in b.items():
            for (i1, j1), c1 in a.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw({e: c for e, c in out.items() if c}, self.variables)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("MPoly exponent must be a nonnegative integer")
        result = MPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        c = _coerce_scalar(c)
        if not c:
            return MPoly._raw({}, self.variables)
        return MPoly._raw({e: v * c for e, v in self._terms.items()}, self.variables)

    def exact_div(self, other):
        """Quotient ``self / other``; raises ``ArithmeticError`` unless it divides."""
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        sa, da = self.to_dense()
        sb, db = other.to_dense()
        q = _dense.exquo(da, db, 2)
        return MPoly.from_dense(q, self.variables).scale(sa / sb)

    # -- calculus and evaluation -------------------------------------------

    def diff(self, var):
        k = self._var_index(var)
        out = {}
        for exp, c in self._terms.items():
            n = exp[k]
            if n:
                e = (exp[0] - 1, exp[1]) if k == 0 else (exp[0], exp[1] - 1)
                out[e] = c * n
        return MPoly._raw(out, self.variables)

    def evaluate(self, point):
        """Exact value at ``point = (v0, v1)``."""
        px, py = (_coerce_scalar(Fraction(p)) for p in point)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * px ** i * py ** j
        return total

    # -- conversions --------------------------------------------------------

    def to_dense(self):
        """Return ``(scale, dense)`` with ``self == scale * dense``.

        ``dense`` is a primitive integer polynomial indexed ``[deg v0][deg v1]``.
        """
        if not self._terms:
            return Fraction(0), []
        den = lcm(*(c.denominator for c in self._terms.values()))
        ints = {e: c.numerator * (den // c.denominator) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = _dense._igcd(g, v)
        dx = max(i for i, _ in ints)
        rows = [[] for _ in range(dx + 1)]
        for (i, j), v in ints.items():
            row = rows[i]
            if len(row) <= j:
                row.extend([0] * (j + 1 - len(row)))
            row[j] = v // g
        return Fraction(g, den), _dense._trim(rows)

    @classmethod
    def from_dense(cls, dense, variables=DEFAULT_VARIABLES):
        terms = {}
        for i, row in enumerate(dense):
            for j, v in enumerate(row):
                if v:
                    terms[(i, j)] = Fraction(v)
        return cls._raw(terms, tuple(variables))

    def primitive_normal(self):
        """Integer primitive associate with positive graded-lex leading coefficient.

        Returns ``(unit, p)`` with ``self == unit * p``.
        """
        if not self._terms:
            return Fraction(1), self
        s, d = self.to_dense()
        p = MPoly.from_dense(d, self.variables)
        if p.leading_coeff() < 0:
            p, s = -p, -s
        return s, p

    # -- comparison and printing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"MPoly({str(self)!r}, variables={self.variables})"

    def __str__(self):
        if not self._terms:
            return "0"
        v0, v1 = self.variables
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append(v0 if i == 1 else f"{v0}^{i}")
            if j:
                mono.append(v1 if j == 1 else f"{v1}^{j}")
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = "*".join(mono)
            else:
                body = f"{a}*" + "*".join(mono)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def mpoly_gcd(a, b):
    """Greatest common divisor, normalized to a primitive integer polynomial
    with positive graded-lex leading coefficient.  ``gcd(0, 0) == 0``."""
    if a.variables != b.variables:
        raise ValueError(f"variable mismatch: {a.variables} vs {b.variables}")
    if a.is_zero() and b.is_zero():
        return a
    if a.is_zero():
        return b.primitive_normal()[1]
    if b.is_zero():
        return a.primitive_normal()[1]
    if a.is_constant() or b.is_constant():
        return MPoly.constant(1, a.variables)
    g = _dense.gcd(a.to_dense()[1], b.to_dense()[1], 2)
    return MPoly.from_dense(g, a.variables).primitive_normal()[1]


def mpoly_arith(a, b, op):
    """Ring operation by name: ``"add"``, ``"sub"`` or ``"mul"``."""
    if a.variables != b.variables:
        raise ValueError(f"variable mismatch: {a.variables} vs {b.variables}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def mpoly_diff(p, var):
    return p.diff(var)
