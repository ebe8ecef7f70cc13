"""Tangent-line expansion and the forgetful map X_E^{+-}(9) -> X_E^{+-}(3)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import SparsePoly, normalize
from ..elliptic import WeierstrassCurve
from ..families3 import HessePoint, check_sign, hesse_family
from .models import CubicPairModel, ProjPt, c4_c6_from_short, twisted_model


class SingularPoint(ValueError):
    pass


class DegenerateLambda(ValueError):
    pass


class CuspPoint(ValueError):
    """gamma_1 = gamma_2 = 0: the forgetful map is not defined by the tangent rule."""


class NotOnModel(ValueError):
    pass


# (i, j) -> (k, l) with (i, j, k, l) an even permutation of (0, 1, 2, 3)
def _even_completion(i, j):
    k, l = [m for m in range(4) if m not in (i, j)]
    perm = (i, j, k, l)
    inversions = sum(1 for p in range(4) for q in range(p + 1, 4) if perm[p] > perm[q])
    return (k, l) if inversions % 2 == 0 else (l, k)


_COMPLETIONS = {(i, j): _even_completion(i, j) for i in range(4) for j in range(4) if i != j}


def lambda_matrix(g1, g2):
    """Alternating 4x4 matrix built from the two gradient vectors.

    Entry (i, j) is g1[k] g2[l] - g1[l] g2[k] for (i, j, k, l) even.  At a
    smooth point of the curve its rows span the tangent line.
    """
    zero = 0 * g1[0]
    L = [[zero] * 4 for _ in range(4)]
    for (i, j), (k, l) in _COMPLETIONS.items():
        L[i][j] = normalize(g1[k] * g2[l] - g1[l] * g2[k])
    return L


@dataclass(frozen=True)
class TangentExpansion:
    """F_i(P + lam Q) = gamma_i lam^2 + delta_i lam^3."""

    P: ProjPt
    Q: ProjPt
    gamma1: object
    gamma2: object
    delta1: object
    delta2: object
    low_order: tuple  # (F1(P), F2(P), dF1(P).Q, dF2(P).Q), all zero

    @property
    def gammas(self):
        return (self.gamma1, self.gamma2)


def expand_along(model: CubicPairModel, P, Q):
    """Coefficients of lam^0..lam^3 of F_i(P + lam Q) for both forms."""
    lam = SparsePoly.var("lam")
    images = {}
    for v, p, q in zip(model.coords, P, Q):
        images[v] = lam * q + p
    out = []
    for F in model.forms:
        G = F.subs(images)
        parts = G.coeffs_in(("lam",))
        coeffs = []
        for k in range(4):
            c = parts.get((k,))
            if c is None:
                coeffs.append(0)
            elif c.is_constant():
                coeffs.append(c.constant_value())
            else:
                coeffs.append(c.with_vars(c.used_vars()))
        out.append(coeffs)
    return out


def tangent_direction(model: CubicPairModel, P) -> ProjPt:
    """First row of the Lambda matrix at P that is not proportional to P."""
    if not model.contains(P):
        raise NotOnModel(f"{P} is not on the model")
    g1, g2 = model.gradients(P)
    L = lambda_matrix(g1, g2)
    if not any(x for row in L for x in row):
        raise SingularPoint(f"Jacobian has rank < 2 at {P}")
    P = ProjPt(P) if not isinstance(P, ProjPt) else P
    for row in L:
        if any(row) and not P.proportional(row):
            return ProjPt(row)
    raise DegenerateLambda(f"every row of Lambda is proportional to {P}")


def tangent_expansion(model: CubicPairModel, P, Q=None) -> TangentExpansion:
    P = ProjPt(P) if not isinstance(P, ProjPt) else P
    if Q is None:
        Q = tangent_direction(model, P)
    Q = ProjPt(Q) if not isinstance(Q, ProjPt) else Q
    (c10, c11, g1, d1), (c20, c21, g2, d2) = expand_along(model, P, Q)
    if c10 or c20:
        raise NotOnModel(f"{P} is not on the model")
    if c11 or c21:
        raise DegenerateLambda("direction is not tangent at P")
    return TangentExpansion(P, Q, g1, g2, d1, d2, (c10, c20, c11, c21))


def forget9(a, b, P, sign: str, Q=None) -> HessePoint:
    """(r : s) = (gamma_2 : 3 gamma_1) for P on X_E^{+-}(9), E: y^2 = x^3 + ax + b."""
    model = twisted_model(a, b, sign)
    return forget9_on_model(model, P, Q)


def forget9_on_model(model: CubicPairModel, P, Q=None) -> HessePoint:
    te = tangent_expansion(model, P, Q)
    if not te.gamma1 and not te.gamma2:
        raise CuspPoint(f"gamma_1 = gamma_2 = 0 at {P}")
    return HessePoint(te.gamma2, 3 * te.gamma1)


def nine_congruent_curve(a, b, P, sign: str) -> WeierstrassCurve:
    """The curve 9-congruent to y^2 = x^3 + ax + b attached to P on X_E^{+-}(9)."""
    sign = check_sign(sign)
    rs = forget9(a, b, P, sign)
    c4, c6 = c4_c6_from_short(a, b)
    return hesse_family(c4, c6, rs, sign)


def curve_from_short(a, b) -> WeierstrassCurve:
    return WeierstrassCurve.short(a, b)


def short_coefficients(E: WeierstrassCurve):
    """(a, b) of y^2 = x^3 + ax + b isomorphic to E (the -27c4, -54c6 model)."""
    return normalize(-27 * Fraction(E.c4)), normalize(-54 * Fraction(E.c6))
