"""Rational functions in the two chart variables, kept in canonical form."""
from fractions import Fraction

from .mpoly import DEFAULT_VARIABLES, MPoly, mpoly_gcd


class PoleError(ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""

    def __init__(self, denominator, point):
        self.denominator = denominator
        self.point = tuple(point)
        pt = ", ".join(str(p) for p in self.point)
        super().__init__(f"denominator {denominator} vanishes at ({pt})")


class RatFunc:
    """Quotient ``num / den`` of two :class:`MPoly`.

    Canonical form: ``gcd(num, den) == 1``, ``den`` is a primitive integer
    polynomial with positive graded-lex leading coefficient (so a constant
    denominator is always ``1``), and zero is ``0 / 1``.  Structural
    equality of canonical forms is mathematical equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, variables=None):
        if not isinstance(num, MPoly):
            variables = variables or (den.variables if isinstance(den, MPoly) else DEFAULT_VARIABLES)
            num = MPoly.constant(Fraction(num), variables)
        if den is None:
            den = MPoly.constant(1, num.variables)
        elif not isinstance(den, MPoly):
            den = MPoly.constant(Fraction(den), num.variables)
        if den.variables != num.variables:
            raise ValueError(f"variable mismatch: {num.variables} vs {den.variables}")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, MPoly.constant(1, p.variables))

    @classmethod
    def constant(cls, c, variables=DEFAULT_VARIABLES):
        return cls.from_poly(MPoly.constant(Fraction(c), variables))

    @classmethod
    def var(cls, name, variables=DEFAULT_VARIABLES):
        return cls.from_poly(MPoly.var(name, variables))

    @property
    def variables(self):
        return self.num.variables

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.den.is_constant() and self.num.is_constant()

    def term_count(self):
        return len(self.num) + len(self.den)

    def normalize(self):
        return RatFunc(self.num, self.den)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            num = self.num + other.num
            if self.den.is_constant():
                return RatFunc._raw(num, self.den)
            return RatFunc(num, self.den)
        if self.den.is_constant():
            return RatFunc._raw(self.num * other.den + other.num, other.den)
        if other.den.is_constant():
            return RatFunc._raw(self.num + other.num * self.den, self.den)
        g = mpoly_gcd(self.den, other.den)
        d1 = self.den.exact_div(g)
        d2 = other.den.exact_div(g)
        num = self.num * d2 + other.num * d1
        return RatFunc(num, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFunc.constant(0, self.variables)
        a, b = self.num, self.den
        c, d = other.num, other.den
        if b.is_constant() and d.is_constant():
            return RatFunc._raw(a * c, b)
        g1 = mpoly_gcd(a, d)
        g2 = mpoly_gcd(c, b)
        if not g1.is_constant():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_constant():
            c, b = c.exact_div(g2), b.exact_div(g2)
        unit, den = (b * d).primitive_normal()
        return RatFunc._raw((a * c).scale(1 / unit), den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        unit, den = self.num.primitive_normal()
        return RatFunc._raw(self.den.scale(1 / unit), den)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("RatFunc exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    # -- calculus and evaluation -------------------------------------------

    def diff(self, var):
        if self.den.is_constant():
            return RatFunc._raw(self.num.diff(var), self.den)
        n, d = self.num, self.den
        return RatFunc(n.diff(var) * d - n * d.diff(var), d * d)

    def evaluate(self, point):
        """Exact value at ``point``; raises :class:`PoleError` on a pole."""
        dv = self.den.evaluate(point)
        if dv == 0:
            raise PoleError(self.den, point)
        return self.num.evaluate(point) / dv

    # -- comparison and printing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_constant() and self.num == other
        if isinstance(other, MPoly):
            return self.den.is_constant() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"


def _canonical(num, den):
    if num.is_zero():
        return num, MPoly.constant(1, num.variables)
    if not den.is_constant():
        g = mpoly_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
    unit, den = den.primitive_normal()
    if unit != 1:
        num = num.scale(1 / unit)
    return num, den


def ratfunc_arith(a, b, op):
    """Field operation by name: ``"add"``, ``"sub"``, ``"mul"`` or ``"div"``."""
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op]()


def eval_point(p, point):
    """Exact value of a rational function (or polynomial) at a point."""
    return p.evaluate(point)
