"""Univariate polynomials with exact field-element coefficients.

Coefficients may be ``Fraction`` or :class:`RatFunc`; anything supporting
``+ - * /`` and comparison with ``0`` works.
"""
from fractions import Fraction


def _is_zero(c):
    return c == 0


class UniPoly:
    """Polynomial ``sum(coeffs[k] * t**k)``; ``coeffs[k]`` is the degree-k coefficient."""

    __slots__ = ("coeffs", "name")

    def __init__(self, coeffs, name="t"):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.name = name

    @classmethod
    def from_descending(cls, coeffs, name="t"):
        return cls(list(reversed(list(coeffs))), name)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def descending(self):
        return list(reversed(self.coeffs))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.name)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.name)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs], self.name)
        if self.is_zero() or other.is_zero():
            return UniPoly([], self.name)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.name)

    def __rmul__(self, other):
        return self * other

    def shift(self, k):
        """Multiply by ``t**k``."""
        return UniPoly([Fraction(0)] * k + list(self.coeffs), self.name)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, fn):
        return UniPoly([fn(c) for c in self.coeffs], self.name)

    def evaluate_coeffs(self, point):
        """Substitute a chart point into every rational-function coefficient."""
        return self.map_coeffs(lambda c: c.evaluate(point) if hasattr(c, "evaluate") else c)

    def compose_square(self, name="t"):
        """Return ``p(t**2)`` as a polynomial in ``t``."""
        out = []
        for c in self.coeffs:
            out.extend([c, Fraction(0)])
        return UniPoly(out, name)

    def even_part_in_square(self, name="X"):
        """For a polynomial with only even powers, return ``q`` with ``q(t**2) == self``."""
        odd = [k for k in range(1, len(self.coeffs), 2) if not _is_zero(self.coeffs[k])]
        if odd:
            raise ValueError(f"odd powers present: {odd}")
        return UniPoly(self.coeffs[::2], name)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            _is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            power = "" if k == 0 else (self.name if k == 1 else f"{self.name}^{k}")
            scalar = _as_scalar(c)
            if scalar is not None:
                neg = scalar < 0
                body = str(abs(scalar))
                if power:
                    body = power if abs(scalar) == 1 else f"{body}*{power}"
            else:
                neg = False
                body = f"({c})*{power}" if power else f"({c})"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)


def _as_scalar(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if getattr(c, "is_constant", lambda: False)():
        return c.num.constant_term()
    return None
