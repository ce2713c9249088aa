"""Tensor calculus on a two-dimensional coordinate chart.

Indices run over ``0, 1`` internally (printed as 1, 2).  Conventions:

* connection coefficients ``Pi[c, a, b]`` = Π^c_ab, symmetric in ``a, b``;
* curvature ``R_ab^c_d = ∂_a Π^c_bd - ∂_b Π^c_ad + Π^c_ae Π^e_bd - Π^c_be Π^e_ad``,
  stored under the key ``(c, a, b, d)``;
* Ricci ``R_ab = R_ca^c_b``; rho ``P_ab = (2/3) R_ab + (1/3) R_ba``;
* volume form ``ε_12 = ε^12 = 1``; raising ``V^a = ε^ab V_b``, lowering
  ``V_b = V^a ε_ab``.

Together these give ρ(1, 1) = 328 for the
connection Π^1_22 = xy, Π^2_11 = -y.  Reversing the orientation of ε
flips the sign of ρ.

A :class:`TensorField` of valence ``(r, s)`` keys its components by index
tuples with the ``r`` contravariant indices first, then the ``s``
covariant ones.
"""
from fractions import Fraction
from itertools import product

from .exactmath import DEFAULT_VARIABLES, RatFunc

DIM = 2
_IDX = range(DIM)
_EPS = {(0, 0): 0, (0, 1): 1, (1, 0): -1, (1, 1): 0}


def eps(a, b):
    """Numerical value of ε_ab (and of ε^ab, which is identical)."""
    return _EPS[(a, b)]


def _zero(variables):
    return RatFunc.constant(0, variables)


def _as_ratfunc(v, variables):
    if isinstance(v, RatFunc):
        return v
    return RatFunc.constant(Fraction(v), variables)


class ChartConnection:
    """Torsion-free connection coefficients Π^c_ab on the chart."""

    __slots__ = ("_entries", "variables", "name")

    def __init__(self, entries=None, variables=DEFAULT_VARIABLES, name=""):
        variables = tuple(variables)
        full = {}
        entries = dict(entries or {})
        for (c, a, b), v in entries.items():
            v = _as_ratfunc(v, variables)
            if v.variables != variables:
                raise ValueError(f"entry {(c, a, b)} uses variables {v.variables}, expected {variables}")
            partner = entries.get((c, b, a))
            if partner is not None and _as_ratfunc(partner, variables) != v:
                raise ValueError(f"connection is not symmetric in its lower indices at {(c, a, b)}")
            full[(c, a, b)] = v
            full[(c, b, a)] = v
        for idx in product(_IDX, repeat=3):
            full.setdefault(idx, _zero(variables))
        self._entries = full
        self.variables = variables
        self.name = name

    @classmethod
    def flat(cls, variables=DEFAULT_VARIABLES):
        return cls({}, variables)

    def __getitem__(self, idx):
        return self._entries[idx]

    def items(self):
        return sorted(self._entries.items())

    def trace(self, a):
        """Π^d_ad."""
        return sum((self[d, a, d] for d in _IDX), _zero(self.variables))

    def is_flat(self):
        return all(v.is_zero() for v in self._entries.values())

    def evaluate(self, point):
        return {k: v.evaluate(point) for k, v in self._entries.items()}

    def __eq__(self, other):
        if not isinstance(other, ChartConnection):
            return NotImplemented
        return self.variables == other.variables and self._entries == other._entries

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        nz = ", ".join(f"{c + 1}_{a + 1}{b + 1}: {v}" for (c, a, b), v in self.items()
                       if a <= b and not v.is_zero())
        return f"ChartConnection({{{nz}}})"


class TensorField:
    """Components of a valence ``(r, s)`` tensor field, upper indices first."""

    __slots__ = ("valence", "components", "variables")

    def __init__(self, valence, components, variables=DEFAULT_VARIABLES):
        r, s = valence
        variables = tuple(variables)
        comps = {}
        for idx in product(_IDX, repeat=r + s):
            comps[idx] = _as_ratfunc(components.get(idx, 0), variables)
        if len(components) > len(comps) or any(k not in comps for k in components):
            raise ValueError(f"component keys do not match valence {valence}")
        self.valence = (r, s)
        self.components = comps
        self.variables = variables

    @classmethod
    def from_function(cls, valence, fn, variables=DEFAULT_VARIABLES):
        r, s = valence
        return cls(valence, {idx: fn(*idx) for idx in product(_IDX, repeat=r + s)}, variables)

    @classmethod
    def scalar(cls, value, variables=DEFAULT_VARIABLES):
        return cls((0, 0), {(): value}, variables)

    @classmethod
    def covector(cls, values, variables=DEFAULT_VARIABLES):
        return cls((0, 1), {(a,): values[a] for a in _IDX}, variables)

    @classmethod
    def vector(cls, values, variables=DEFAULT_VARIABLES):
        return cls((1, 0), {(a,): values[a] for a in _IDX}, variables)

    @property
    def rank(self):
        return sum(self.valence)

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self.components[idx]

    def is_zero(self):
        return all(v.is_zero() for v in self.components.values())

    def as_list(self):
        """Components of a rank-1 field as ``[v0, v1]``."""
        if self.rank != 1:
            raise ValueError("as_list needs a rank-1 field")
        return [self.components[(a,)] for a in _IDX]

    def map(self, fn):
        return TensorField(self.valence, {k: fn(v) for k, v in self.components.items()}, self.variables)

    def evaluate(self, point):
        return {k: v.evaluate(point) for k, v in self.components.items()}

    def __add__(self, other):
        _check_same_valence(self, other)
        return TensorField(self.valence, {k: v + other.components[k] for k, v in self.components.items()},
                           self.variables)

    def __sub__(self, other):
        _check_same_valence(self, other)
        return TensorField(self.valence, {k: v - other.components[k] for k, v in self.components.items()},
                           self.variables)

    def __eq__(self, other):
        if not isinstance(other, TensorField):
            return NotImplemented
        return self.valence == other.valence and self.components == other.components

    def __hash__(self):
        return hash((self.valence, tuple(sorted(self.components.items()))))

    def __repr__(self):
        return f"TensorField({self.valence}, {{{', '.join(f'{k}: {v}' for k, v in sorted(self.components.items()))}}})"


def _check_same_valence(a, b):
    if a.valence != b.valence:
        raise ValueError(f"valence mismatch: {a.valence} vs {b.valence}")


def partial(f, a, variables):
    """∂_a of a scalar rational function."""
    return f.diff(variables[a])


def shift_connection(conn, upsilon):
    """Projectively equivalent connection Π^c_ab + δ^c_a Υ_b + δ^c_b Υ_a."""
    if upsilon.valence != (0, 1):
        raise ValueError(f"shift needs a covector, got valence {upsilon.valence}")
    out = {}
    for c, a, b in product(_IDX, repeat=3):
        v = conn[c, a, b]
        if c == a:
            v = v + upsilon[b]
        if c == b:
            v = v + upsilon[a]
        out[(c, a, b)] = v
    return ChartConnection(out, conn.variables, name=conn.name)


def normalize_connection(conn):
    """The representative of the projective class with Π^d_ad = 0.

    In constant-ε coordinates a trace-free connection is exactly one that
    preserves the volume form, and it is unique within the class.
    """
    third = Fraction(-1, 3)
    ups = TensorField.covector([conn.trace(a) * third for a in _IDX], conn.variables)
    if ups.is_zero():
        return conn
    return shift_connection(conn, ups)


def curvature(conn):
    """Riemann tensor R_ab^c_d, keyed ``(c, a, b, d)``."""
    vs = conn.variables
    comps = {}
    for c, a, b, d in product(_IDX, repeat=4):
        if a == b:
            comps[(c, a, b, d)] = _zero(vs)
            continue
        if a > b:
            comps[(c, a, b, d)] = -comps[(c, b, a, d)]
            continue
        v = partial(conn[c, b, d], a, vs) - partial(conn[c, a, d], b, vs)
        for e in _IDX:
            v = v + conn[c, a, e] * conn[e, b, d] - conn[c, b, e] * conn[e, a, d]
        comps[(c, a, b, d)] = v
    return TensorField((1, 3), comps, vs)


def ricci(R):
    """Ricci tensor R_ab = R_ca^c_b."""
    if R.valence != (1, 3):
        raise ValueError(f"ricci needs a (1, 3) curvature tensor, got {R.valence}")
    return TensorField.from_function(
        (0, 2), lambda a, b: R[0, 0, a, b] + R[1, 1, a, b], R.variables)


class AsymmetricRhoError(ValueError):
    """The rho tensor has a skew part; the connection does not preserve ε."""


def rho_tensor(ric, check_symmetric=True):
    """Projective rho tensor P_ab = (2/3) R_ab + (1/3) R_ba."""
    if ric.valence != (0, 2):
        raise ValueError(f"rho_tensor needs a (0, 2) tensor, got {ric.valence}")
    two, one = Fraction(2, 3), Fraction(1, 3)
    P = TensorField.from_function(
        (0, 2), lambda a, b: ric[a, b] * two + ric[b, a] * one, ric.variables)
    if check_symmetric and P[0, 1] != P[1, 0]:
        raise AsymmetricRhoError(f"P_12 - P_21 = {P[0, 1] - P[1, 0]} (connection not normalized?)")
    return P


def covariant_derivative(T, conn):
    """∇T with the new covariant index placed first among the lower indices."""
    r, s = T.valence
    vs = conn.variables
    comps = {}
    for idx in product(_IDX, repeat=r + s + 1):
        up, a, low = idx[:r], idx[r], idx[r + 1:]
        key = up + low
        v = partial(T[key], a, vs)
        for pos in range(r):
            for e in _IDX:
                g = conn[up[pos], a, e]
                if g:
                    v = v + g * T[up[:pos] + (e,) + up[pos + 1:] + low]
        for pos in range(s):
            for e in _IDX:
                g = conn[e, a, low[pos]]
                if g:
                    v = v - g * T[up + low[:pos] + (e,) + low[pos + 1:]]
        comps[idx] = v
    return TensorField((r, s + 1), comps, vs)


def raise_index(omega):
    """V^a = ε^ab V_b."""
    if omega.valence != (0, 1):
        raise ValueError("raise_index needs a covector")
    w = omega.as_list()
    return TensorField.vector([w[1], -w[0]], omega.variables)


def lower_index(v):
    """V_b = V^a ε_ab."""
    if v.valence != (1, 0):
        raise ValueError("lower_index needs a vector")
    w = v.as_list()
    return TensorField.covector([-w[1], w[0]], v.variables)


def cotton_tensor(P, conn):
    """Y_abc = ∇_a P_bc - ∇_b P_ac."""
    dP = covariant_derivative(P, conn)
    return TensorField.from_function(
        (0, 3), lambda a, b, c: dP[a, b, c] - dP[b, a, c], P.variables)


def cotton_york(P, conn):
    """Dualized Cotton-York covector Y_a = ε^bc Y_bca and its raised form Y^a."""
    Y3 = cotton_tensor(P, conn)
    Ylow = TensorField.covector(
        [sum((Y3[b, c, a] * eps(b, c) for b in _IDX for c in _IDX if eps(b, c)), _zero(P.variables))
         for a in _IDX], P.variables)
    return Ylow, raise_index(Ylow)


def projective_data(conn):
    """Normalized connection with its curvature, Ricci and rho tensors."""
    conn = normalize_connection(conn)
    R = curvature(conn)
    ric = ricci(R)
    return conn, R, ric, rho_tensor(ric)
