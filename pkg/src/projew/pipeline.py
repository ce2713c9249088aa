"""Projective invariants of a surface and the coefficients of the
polynomial constraints on the dual Faraday scalar ``F``.

Everything is computed in the volume-preserving gauge, where projective
densities reduce to ordinary scalars and tensors.
"""
import enum
from dataclasses import dataclass, fields
from fractions import Fraction

from .exactmath import PoleError, RatFunc, UniPoly
from .geometry import (
    TensorField,
    cotton_york,
    covariant_derivative,
    curvature,
    lower_index,
    projective_data,
    rho_tensor,
    ricci,
)


class Branch(enum.Enum):
    FLAT = "flat"
    GENERIC = "generic"
    SPECIAL = "special"


class BranchError(ValueError):
    """An operation was called on a structure in the wrong branch."""


def _zero(variables):
    return RatFunc.constant(0, variables)


def directional(V, f, variables):
    """V^a ∂_a f for a vector ``V`` and scalar ``f``."""
    return V[0] * f.diff(variables[0]) + V[1] * f.diff(variables[1])


def contract2(A, B, T):
    """A^e B^d T_ed for vectors ``A``, ``B`` and a covariant 2-tensor ``T``."""
    total = _zero(T.variables)
    for e in range(2):
        for d in range(2):
            if A[e] and B[d]:
                total = total + A[e] * B[d] * T[e, d]
    return total


def pair(omega, V):
    """ω_a V^a."""
    return omega[0] * V[0] + omega[1] * V[1]


@dataclass(frozen=True)
class InvariantBundle:
    connection: object  # normalized ChartConnection
    P: TensorField
    Y: TensorField      # Y_a
    Yup: TensorField    # Y^a
    phi: RatFunc
    Wup: TensorField    # W^a
    W: TensorField      # W_a
    rho: RatFunc
    ell: RatFunc

    @property
    def variables(self):
        return self.connection.variables


def invariant_bundle(conn):
    """Compute P, Y, φ, W, ρ and ℓ for the normalized representative of ``conn``."""
    conn, _, _, P = projective_data(conn)
    vs = conn.variables
    Y, Yup = cotton_york(P, conn)
    DYup = covariant_derivative(Yup, conn)      # key (b, a) = ∇_a Y^b
    phi = (DYup[0, 0] + DYup[1, 1]) * 2
    two_thirds_phi = phi * Fraction(2, 3)
    Wup = TensorField.vector(
        [sum((Yup[b] * DYup[a, b] for b in range(2) if Yup[b]), _zero(vs)) - two_thirds_phi * Yup[a]
         for a in range(2)], vs)
    rho = pair(Y, Wup)
    PYY = contract2(Yup, Yup, P)
    ell = phi * phi * Fraction(5, 12) + PYY * 3 - directional(Yup, phi, vs) * Fraction(1, 2)
    return InvariantBundle(conn, P, Y, Yup, phi, Wup, lower_index(Wup), rho, ell)


def branch(bundle):
    """Flat if Y ≡ 0, special if ρ ≡ 0 otherwise, generic otherwise."""
    if bundle.Y.is_zero():
        return Branch.FLAT
    if bundle.rho.is_zero():
        return Branch.SPECIAL
    return Branch.GENERIC


# -- generic branch ------------------------------------------------------

_INGREDIENTS = (
    "rho", "phi", "ell", "divW", "Y_drho", "W_drho", "W_dphi", "Y_dell", "W_dell",
    "WY_DW", "WW_DW", "WY_DY", "YY_DW", "WW_DY", "YW_DW", "P_WW", "P_YW",
)


def generic_ingredients(bundle):
    """The scalar building blocks of the nine constraint coefficients.

    Names read as contractions: ``WY_DW`` is W^e Y^d ∇_e W_d, ``YW_DW`` is
    Y^e W^d ∇_e W_d (first letter contracts the derivative index),
    ``Y_drho`` is Y^a ∇_a ρ, ``P_WW`` is P_ab W^a W^b, and so on.
    """
    conn, vs = bundle.connection, bundle.variables
    Yup, Wup = bundle.Yup, bundle.Wup
    DW = covariant_derivative(bundle.W, conn)     # key (e, d) = ∇_e W_d
    DY = covariant_derivative(bundle.Y, conn)
    DWup = covariant_derivative(Wup, conn)       # key (b, a) = ∇_a W^b
    return {
        "rho": bundle.rho,
        "phi": bundle.phi,
        "ell": bundle.ell,
        "divW": DWup[0, 0] + DWup[1, 1],
        "Y_drho": directional(Yup, bundle.rho, vs),
        "W_drho": directional(Wup, bundle.rho, vs),
        "W_dphi": directional(Wup, bundle.phi, vs),
        "Y_dell": directional(Yup, bundle.ell, vs),
        "W_dell": directional(Wup, bundle.ell, vs),
        "WY_DW": contract2(Wup, Yup, DW),
        "WW_DW": contract2(Wup, Wup, DW),
        "WY_DY": contract2(Wup, Yup, DY),
        "YY_DW": contract2(Yup, Yup, DW),
        "WW_DY": contract2(Wup, Wup, DY),
        "YW_DW": contract2(Yup, Wup, DW),
        "P_WW": contract2(Wup, Wup, bundle.P),
        "P_YW": contract2(Yup, Wup, bundle.P),
    }


@dataclass(frozen=True)
class GenericCoeffs:
    a1: object
    a2: object
    a3: object
    b1: object
    b2: object
    b3: object
    c1: object
    c2: object
    c3: object

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def evaluate(self, point):
        return GenericCoeffs(**{k: v.evaluate(point) for k, v in self.as_dict().items()})


def assemble_coeffs(g):
    """Combine ingredient values (symbolic or numeric) into the nine coefficients."""
    rho, phi, ell = g["rho"], g["phi"], g["ell"]
    if rho == 0:
        raise BranchError("rho vanishes; the generic-branch coefficients are undefined")
    inv = 1 / rho if not isinstance(rho, RatFunc) else rho.inverse()
    F = Fraction
    Ydr = g["Y_drho"] * inv
    Wdr = g["W_drho"] * inv
    WYDW = g["WY_DW"] * inv
    WWDW = g["WW_DW"] * inv

    a1 = (Ydr - phi * F(5, 2)) * 15
    a2 = -(Wdr * 3 + ell * 6 - g["divW"] * 3)
    a3 = (g["W_dphi"] * F(1, 2) + phi * g["divW"] * F(1, 2) + g["Y_dell"] + phi * ell * F(1, 2)
          - phi * Wdr * F(1, 2) - ell * Ydr)
    b1 = WYDW * -5 + ell * F(50, 3)
    b2 = WWDW
    b3 = (phi * WWDW * F(1, 6) + g["P_WW"] + ell * ell * F(1, 9) + ell * WYDW * F(1, 3)
          + g["W_dell"] * F(1, 3))
    c1 = (g["WY_DY"] + g["YY_DW"]) * inv * F(-5, 2) - phi * F(25, 6)
    c2 = ell * F(2, 3) + (g["WW_DY"] + g["YW_DW"]) * inv * F(1, 2)
    c3 = (g["W_dphi"] * F(-1, 12) + phi * g["WW_DY"] * inv * F(1, 12)
          + ell * g["WY_DY"] * inv * F(1, 6) + g["P_YW"] + g["Y_dell"] * F(1, 6)
          + phi * g["YW_DW"] * inv * F(1, 12) - ell * phi * F(1, 18)
          + ell * g["YY_DW"] * inv * F(1, 6))
    return GenericCoeffs(a1, a2, a3, b1, b2, b3, c1, c2, c3)


def generic_coeffs(bundle, at=None):
    """The nine coefficients a1..c3, symbolically or at the chart point ``at``.

    At a point the ingredients are evaluated first and combined in ℚ, which
    avoids rational-function blow-up; the result equals evaluating the
    symbolic coefficients there.  Raises :class:`BranchError` if ρ ≡ 0 and
    :class:`~projew.exactmath.PoleError` if a needed value has a pole.
    """
    if bundle.rho.is_zero():
        raise BranchError("rho is identically zero; use the special branch")
    g = generic_ingredients(bundle)
    if at is not None:
        g = {k: v.evaluate(at) for k, v in g.items()}
        if g["rho"] == 0:
            raise PoleError(bundle.rho.num, at)
    return assemble_coeffs(g)


def reconstruct_alpha(bundle, F):
    """α_a = (φ/2 + 3F²) W_a / (3ρ) - (15F⁴ - ℓ) Y_a / (3ρ)."""
    if bundle.rho.is_zero():
        raise BranchError("alpha can only be solved for when rho is not identically zero")
    vs = bundle.variables
    if not isinstance(F, RatFunc):
        F = RatFunc.constant(Fraction(F), vs)
    inv3rho = (bundle.rho * 3).inverse()
    F2 = F * F
    cw = (bundle.phi * Fraction(1, 2) + F2 * 3) * inv3rho
    cy = (F2 * F2 * 15 - bundle.ell) * inv3rho
    return TensorField.covector([cw * bundle.W[a] - cy * bundle.Y[a] for a in range(2)], vs)


def pew_residual(conn, alpha):
    """∇_(a α_b) + α_a α_b + P_(ab) for the connection exactly as given."""
    if alpha.valence != (0, 1):
        raise ValueError("alpha must be a covector field")
    P = rho_tensor(ricci(curvature(conn)), check_symmetric=False)
    Da = covariant_derivative(alpha, conn)
    half = Fraction(1, 2)
    return TensorField.from_function(
        (0, 2),
        lambda a, b: (Da[a, b] + Da[b, a]) * half + alpha[a] * alpha[b] + (P[a, b] + P[b, a]) * half,
        conn.variables)


# -- special branch ------------------------------------------------------

@dataclass(frozen=True)
class SpecialBranch:
    f: RatFunc
    h: RatFunc
    k: RatFunc
    m: RatFunc
    obstruction: RatFunc
    quartic: UniPoly     # 15t⁴ - 3f t² - h, satisfied by t = F
    quadratic: UniPoly   # k t² + m, satisfied by t = F


class ConsistencyError(RuntimeError):
    """An internal identity that must hold exactly failed."""


def special_branch(bundle):
    """f, h, k, m and the single obstruction for a non-flat structure with ρ ≡ 0."""
    if bundle.Y.is_zero():
        raise BranchError("Y vanishes identically: the structure is projectively flat")
    if not bundle.rho.is_zero():
        raise BranchError("rho is not identically zero; use the generic branch")
    vs = bundle.variables
    Yup, Wup, phi, ell = bundle.Yup, bundle.Wup, bundle.phi, bundle.ell
    i = 0 if Yup[0] else 1
    f = Wup[i] / Yup[i]
    if Yup[0] * Wup[1] != Yup[1] * Wup[0] or any(f * Yup[a] != Wup[a] for a in range(2)):
        raise ConsistencyError("W is not proportional to Y although rho vanishes")
    F = Fraction
    h = ell + f * phi * F(1, 2)
    k = phi * f * 3 - directional(Yup, f, vs) * 3 + h * 12 + f * f * F(18, 5)
    m = h * f * F(6, 5) - directional(Yup, h, vs) + phi * h * 2
    obstruction = k * directional(Yup, m, vs) - m * (directional(Yup, k, vs) + k * phi - m * 6)
    zero = RatFunc.constant(0, vs)
    quartic = UniPoly([-h, zero, -f * 3, zero, RatFunc.constant(15, vs)])
    quadratic = UniPoly([m, zero, k])
    return SpecialBranch(f, h, k, m, obstruction, quartic, quadratic)
