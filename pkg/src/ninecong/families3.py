"""Curves 3-congruent to a given curve.

Two presentations are provided: the Hesse-polynomial family over the
(r:s)-line for y^2 = x^3 - 27 c4 x - 54 c6, and the simpler family available
when the curve has a rational 3-torsion point.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .algebra import SparsePoly, as_fraction, fdiv, gens, normalize
from .elliptic import (
    CurvePoint,
    SingularCurve,
    WeierstrassCurve,
    mul,
)

DIRECT = "direct"
REVERSE = "reverse"
SIGNS = (DIRECT, REVERSE)


class SingularFiber(ValueError):
    """The parameter is a cusp: the family member is singular."""


class NotThreeTorsion(ValueError):
    pass


def check_sign(sign: str) -> str:
    if sign in ("+", "plus", DIRECT):
        return DIRECT
    if sign in ("-", "minus", REVERSE):
        return REVERSE
    raise ValueError(f"sign must be 'direct' or 'reverse', got {sign!r}")


@dataclass(frozen=True)
class HessePoint:
    """Projective point (r : s) on the X_E(3) line."""

    r: object
    s: object

    def __post_init__(self):
        if not self.r and not self.s:
            raise ValueError("(0 : 0) is not a projective point")

    def normalized(self) -> "HessePoint":
        """Coprime integers with r > 0, or (0 : 1); only for rational entries."""
        r, s = as_fraction(self.r), as_fraction(self.s)
        den = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        ri, si = int(r * den), int(s * den)
        g = gcd(ri, si)
        ri, si = ri // g, si // g
        if ri < 0 or (ri == 0 and si < 0):
            ri, si = -ri, -si
        return HessePoint(ri, si)

    def proportional(self, other: "HessePoint") -> bool:
        return not (self.r * other.s - self.s * other.r)


# ---------------------------------------------------------------- forms
def _rs_forms():
    c4, c6, r, s = gens("c4 c6 r s")
    A_plus = (c4 * r**4 + 4 * c6 * r**3 * s + 6 * c4**2 * r**2 * s**2 + 4 * c4 * c6 * r * s**3
              - (3 * c4**3 - 4 * c6**2) * s**4)
    B_plus = (c6 * r**6 + 6 * c4**2 * r**5 * s + 15 * c4 * c6 * r**4 * s**2
              + 20 * c6**2 * r**3 * s**3 + 15 * c4**2 * c6 * r**2 * s**4
              + 6 * (3 * c4**4 - 2 * c4 * c6**2) * r * s**5 + (9 * c4**3 * c6 - 8 * c6**3) * s**6)
    f_plus = r**4 - 6 * c4 * r**2 * s**2 - 8 * c6 * r * s**3 - 3 * c4**2 * s**4
    return A_plus, B_plus, f_plus


_A_PLUS, _B_PLUS, _F_PLUS = _rs_forms()


def hesse_polynomials(sign: str):
    """(numerator of A, numerator of B, common denominator) as polynomials in c4, c6, r, s.

    A^- and B^- carry the denominators (c4^3 - c6^2) and its square; they are
    returned separately so callers can stay polynomial.
    """
    sign = check_sign(sign)
    if sign == DIRECT:
        one = SparsePoly.const(1, _A_PLUS.vars)
        return _A_PLUS, _B_PLUS, one, one
    c4, c6 = gens("c4 c6")
    D = c4**3 - c6**2
    return -4 * _F_PLUS, -8 * _B_PLUS, D, D**2


def cusp_form(sign: str) -> SparsePoly:
    """f_+ or f_- in ``c4, c6, r, s``; its roots are the cusps of X_E^{+-}(3)."""
    sign = check_sign(sign)
    return _F_PLUS if sign == DIRECT else _A_PLUS


def hesse_coefficients(c4, c6, pt: HessePoint, sign: str):
    """(A, B) evaluated at (r:s) in the coefficient domain of c4, c6, r, s."""
    A_num, B_num, A_den, B_den = hesse_polynomials(sign)
    vals = {"c4": c4, "c6": c6, "r": pt.r, "s": pt.s}
    A = A_num.evaluate(vals)
    B = B_num.evaluate(vals)
    if check_sign(sign) == REVERSE:
        D = A_den.evaluate(vals)
        if not D:
            raise SingularCurve("c4^3 - c6^2 vanishes: E itself is singular")
        A = fdiv(A, D)
        B = fdiv(B, B_den.evaluate(vals))
    return normalize(A), normalize(B)


def hesse_family(c4, c6, pt: HessePoint, sign: str) -> WeierstrassCurve:
    """y^2 = x^3 - 27 A(r,s) x - 54 B(r,s): the member of Y_E^{+-}(3) at (r:s)."""
    A, B = hesse_coefficients(c4, c6, pt, sign)
    try:
        return WeierstrassCurve.short(-27 * A, -54 * B)
    except SingularCurve as exc:
        raise SingularFiber(f"(r:s) = ({pt.r}:{pt.s}) is a cusp") from exc


def family_discriminant(sign: str) -> SparsePoly:
    """A^3 - B^2 (up to the positive constant and the c4^3-c6^2 power) as a form in r, s."""
    A_num, B_num, A_den, B_den = hesse_polynomials(sign)
    if check_sign(sign) == DIRECT:
        return A_num**3 - B_num**2
    # D^4 (A^3 - B^2) with A = A_num / D, B = B_num / D^2
    return A_num**3 * A_den - B_num**2


# ------------------------------------------------------ 3-torsion families
@dataclass(frozen=True)
class Torsion3Curve:
    """y^2 + a1 xy + a3 y = x^3 with the 3-torsion point (0, 0)."""

    a1: object
    a3: object

    def __post_init__(self):
        if not self.a3 or not (self.a1**3 - 27 * self.a3):
            raise SingularCurve("need a3 != 0 and a1^3 != 27 a3")

    @property
    def discriminant(self):
        return self.a3**3 * (self.a1**3 - 27 * self.a3)

    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(self.a1, 0, self.a3, 0, 0)


def torsion3_family(t_E, disc, t, sign: str) -> WeierstrassCurve:
    """y^2 + 3t xy + (t^3 - disc^{+-1}) y = x^3.

    The family depends on ``disc`` alone; ``t_E`` names the base curve, which
    is the direct member at ``t = t_E``.
    """
    sign = check_sign(sign)
    if not disc:
        raise SingularCurve("discriminant must be nonzero")
    target = disc if sign == DIRECT else fdiv(1, disc)
    a3 = t**3 - target
    if not a3:
        raise SingularFiber(f"t^3 = {target}: a cusp of the family")
    try:
        return WeierstrassCurve(3 * t, 0, a3, 0, 0)
    except SingularCurve as exc:
        raise SingularFiber("singular member") from exc


def torsion3_to_hesse(a1, a3, t, sign: str = DIRECT) -> HessePoint:
    """(r:s) on the Hesse family of y^2 + a1 xy + a3 y = x^3 matching parameter t.

    The member of ``hesse_family`` at this point is isomorphic to
    ``torsion3_family(_, a3^3 (a1^3 - 27 a3), t, sign)``.
    """
    if check_sign(sign) == DIRECT:
        return HessePoint(a1**2 * t - a1**3 * a3 + 36 * a3**2, t - a1 * a3)
    return HessePoint((a1**3 * a3 - 36 * a3**2) * t + 2 * a1**2, a1 * a3 * t + 2)


@dataclass(frozen=True)
class TorsionTransform:
    """x = x' + r, y = y' + s x' + t (a u = 1 change of coordinates)."""

    r: object
    s: object
    t: object

    def apply(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        x = P.x - self.r
        return CurvePoint(normalize(x), normalize(P.y - self.s * x - self.t))


def to_torsion_form(E: WeierstrassCurve, T: CurvePoint):
    """Move a 3-torsion point to (0,0) on y^2 + a1 xy + a3 y = x^3.

    Returns ``(Torsion3Curve, TorsionTransform)``; the transform maps points
    of ``E`` to the new model.
    """
    if T.is_infinity or not E.contains(T) or not mul(E, T, 3).is_infinity:
        raise NotThreeTorsion(f"{T} is not a point of order 3")
    E1 = E.change_coordinates(1, T.x, 0, T.y)
    a1, a2, a3, a4, a6 = E1.ainvs
    if a6 or not a3:
        raise NotThreeTorsion("translated point is not a 3-torsion point")
    s = fdiv(a4, a3)
    E2 = E1.change_coordinates(1, 0, s, 0)
    if E2.a2 or E2.a4 or E2.a6:
        raise NotThreeTorsion("model does not reduce to y^2 + a1 xy + a3 y = x^3")
    return Torsion3Curve(E2.a1, E2.a3), TorsionTransform(T.x, s, T.y)


def torsion_basis_symbolic():
    """Data for checking the second 3-torsion generator symbolically.

    Returns ``(F, P, relations)``: the homogenised cubic ``F(X,Y,Z)`` for
    y^2 + a1 xy + a3 y = x^3 over ``Q[a1, a3, delta, zeta]``, the projective
    point ``P = (3 a3 : a3 (zeta delta - a1) : delta - a1)`` and the
    rewriting rules ``delta^3 -> a1^3 - 27 a3``, ``zeta^2 -> -zeta - 1``.
    """
    X, Y, Z, a1, a3, delta, zeta = gens("X Y Z a1 a3 delta zeta")
    F = Y**2 * Z + a1 * X * Y * Z + a3 * Y * Z**2 - X**3
    P = (3 * a3, a3 * (zeta * delta - a1), delta - a1)
    rules = {"delta": (3, a1**3 - 27 * a3), "zeta": (2, -zeta - 1)}
    return F, P, rules


def reduce_power_rules(f: SparsePoly, rules) -> SparsePoly:
    """Rewrite ``v^k -> image`` repeatedly for each rule ``v: (k, image)``."""
    changed = True
    while changed:
        changed = False
        for v, (k, img) in rules.items():
            if v not in f.vars or f.degree(v) < k:
                continue
            i = f.vars.index(v)
            out = SparsePoly.const(0, f.vars)
            keep = {}
            for e, c in f.terms.items():
                if e[i] >= k:
                    q, rem = divmod(e[i], k)
                    ne = list(e)
                    ne[i] = rem
                    out = out + SparsePoly(f.vars, {tuple(ne): c}) * img**q
                else:
                    keep[e] = c
            f = out + SparsePoly(f.vars, keep)
            changed = True
    return f
