"""Elliptic surfaces birational to the diagonal quotient surfaces Z^{+-}(9).

Besides the two surfaces over Q(T) this module carries the machinery used to
check them fibre by fibre: reduction of a plane cubic with a rational point to
Weierstrass form, and projection of a quadric intersection in P^3 to a plane
cubic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import RatFun, SparsePoly, fdiv, gens, normalize, poly_substitute
from .elliptic import (
    BadReduction,
    CurvePoint,
    SingularCurve,
    WeierstrassCurve,
)
from .families3 import DIRECT, check_sign
from .modular9.models import GENERIC_FORMS

TORSION_BOUND = 12  # largest order of a rational torsion point over Q


class BadSpecialization(ValueError):
    pass


class SingularCubic(ValueError):
    pass


class DegenerateProjection(ValueError):
    pass


# ---------------------------------------------------------------- surfaces
@dataclass(frozen=True)
class EllipticSurface:
    curve: WeierstrassCurve  # coefficients in Q(T)
    sign: str

    def specialize(self, T0) -> WeierstrassCurve:
        try:
            return self.curve.specialize(T0)
        except (BadReduction, SingularCurve) as exc:
            raise BadSpecialization(f"T = {T0} is a bad fibre") from exc

    @property
    def discriminant(self) -> RatFun:
        return self.curve.discriminant

    def section(self) -> CurvePoint:
        return CurvePoint(0, 0)


def surface(sign: str) -> EllipticSurface:
    sign = check_sign(sign)
    T = RatFun.gen("T")
    if sign == DIRECT:
        a1 = 6 * T**2 + 3 * T + 2
        a3 = T**2 * (T + 1) * (4 * T**3 + 9 * T + 9)
        a2 = -(16 * T**4 + 12 * T**3 + 9 * T**2 + 6 * T + 1)
    else:
        a1 = 12 * T**3 + 3 * T**2 - 6
        a3 = (T - 1) ** 3 * (T**3 - 1) * (4 * T**3 - 3 * T - 7)
        a2 = -3 * (T + 1) * (T**3 - 1) * (9 * T**2 + 2 * T + 1)
    return EllipticSurface(WeierstrassCurve(a1, a2, a3, 0, 0), sign)


@dataclass
class MultiplesReport:
    sign: str
    T0: object
    fibre: WeierstrassCurve
    multiples: list  # (n, point) for n = 1..n_max
    zero_at: list

    @property
    def certificate(self) -> bool:
        """No multiple up to the torsion bound vanishes, so the section has infinite order."""
        return not self.zero_at and len(self.multiples) >= TORSION_BOUND


def section_multiples(S: EllipticSurface, n_max: int = TORSION_BOUND, T0=2) -> MultiplesReport:
    E = S.specialize(T0)
    P = CurvePoint(0, 0)
    if not E.contains(P):
        raise BadSpecialization(f"(0,0) is not on the fibre at T = {T0}")
    rows, zeros = [], []
    Q = P
    for n in range(1, n_max + 1):
        if n > 1:
            Q = E.add(Q, P)
        rows.append((n, Q))
        if Q.is_infinity:
            zeros.append(n)
    return MultiplesReport(S.sign, T0, E, rows, zeros)


def first_good_fibre(S: EllipticSurface, start: int = 2, limit: int = 50) -> int:
    for T0 in range(start, start + limit):
        try:
            S.specialize(T0)
        except BadSpecialization:
            continue
        return T0
    raise BadSpecialization(f"no good integer fibre in [{start}, {start + limit})")


# ------------------------------------------------- substitution identities
def _direct_parts():
    T, u, v, w = gens("T u v w")
    g0 = u**2 + 3 * u * v + 3 * v**2 + 9 * u * w + 6 * T * v * w + 3 * (T**2 - 12 * T + 24) * w**2
    g1 = T**3 - 9 * T**2 + 36 * T - 36
    h0 = v**2 * w - (T - 1) * u * w**2 + 2 * (T - 6) * v * w**2 + (T**2 - 24 * T + 48) * w**3
    h1 = u + (T**2 - 6 * T + 12) * v - 3 * (T - 2) * (T - 6) * w
    return g0, g1, h0, h1


def _reverse_parts():
    T, u, v, w, s = gens("T u v w s")
    q1 = (3 * u**2 - u * v - 3 * u * w + 2 * (3 * T - 1) * u * s - 6 * v * w
          - 3 * (2 * T - 3) * v * s + 2 * w**2 - 3 * T**2 * w * s + 9 * T**2 * s**2)
    q2 = (3 * (T - 2) * u**2 + 3 * u * v + u * w - 2 * v**2 - 6 * (2 * T - 3) * v * w
          + 3 * (6 * T - 1) * v * s + 9 * T**2 * w * s + 3 * T**3 * s**2)
    return q1, q2


def direct_cubic() -> SparsePoly:
    """g0 h1 - g1 h0, a plane cubic in (u : v : w) over Q(T)."""
    g0, g1, h0, h1 = _direct_parts()
    return g0 * h1 - g1 * h0


def reverse_quadrics():
    return _reverse_parts()


DIRECT_POINT = lambda T: (12, T - 6, -1)  # noqa: E731
REVERSE_POINT = (2, 1, 1, 0)


def substitution_identities(sign: str) -> dict:
    """The two expansions of F1, F2 after the substitution that slices out the G_m action."""
    sign = check_sign(sign)
    T, u, v, w, s = gens("T u v w s")
    F1, F2 = GENERIC_FORMS[sign]
    if sign == DIRECT:
        g0, g1, h0, h1 = _direct_parts()
        assign = {"x": 6 * v * s - 3 * w**3, "y": 2 * s * T - w**2, "z": w, "t": T**0,
                  "a": 12 * s - 3 * w**2, "b": u * s + 2 * w**3}
        expected = (12 * s**2 * (g0 + 4 * s * g1), 36 * s**2 * (h0 + 4 * s * h1))
        labels = ("F1 = 12 s^2 (g0 + 4 s g1)", "F2 = 36 s^2 (h0 + 4 s h1)")
    else:
        q1, q2 = _reverse_parts()
        assign = {"x": -3 * s**2 * T - w**2, "y": s - w, "z": 2 * w, "t": T**0,
                  "a": 3 * u * s - 3 * w**2, "b": 3 * v * s**2 - 3 * u * w * s + 2 * w**3}
        expected = (9 * s**3 * q1, 9 * s**3 * (w * q1 - s * q2))
        labels = ("F1 = 9 s^3 q1", "F2 = 9 s^3 (w q1 - s q2)")
    out = {}
    for F, exp, lab in zip((F1, F2), expected, labels):
        out[lab] = poly_substitute(F, assign) == exp
    return out


# ------------------------------------------------ reduction to Weierstrass
@dataclass(frozen=True)
class PlaneCubicWithPoint:
    F: SparsePoly
    point: tuple
    variables: tuple = ("u", "v", "w")

    def __post_init__(self):
        if len(self.point) != 3 or not any(self.point):
            raise ValueError("need a point of P^2")
        vals = dict(zip(self.variables, self.point))
        if self.F.evaluate(vals):
            raise ValueError(f"{self.point} is not on the cubic")


@dataclass(frozen=True)
class QuadricIntersectionWithPoint:
    q1: SparsePoly
    q2: SparsePoly
    point: tuple
    variables: tuple = ("u", "v", "w", "s")


def _basis_through(P):
    """Invertible matrix whose last column is P (remaining columns standard vectors)."""
    n = len(P)
    k = next(i for i, c in enumerate(P) if c)
    others = [i for i in range(n) if i != k]
    M = [[0] * n for _ in range(n)]
    for col, i in enumerate(others):
        M[i][col] = 1
    for i in range(n):
        M[i][n - 1] = P[i]
    return M


def _move(F: SparsePoly, variables, M, new_vars):
    xs = [SparsePoly.var(v, new_vars) for v in new_vars]
    images = {}
    for v, row in zip(variables, M):
        img = SparsePoly.const(0, new_vars)
        for m, x in zip(row, xs):
            if m:
                img = img + m * x
        images[v] = img
    full = {v: images.get(v, SparsePoly.var(v)) for v in F.vars}
    return poly_substitute(F, full).with_vars(new_vars)


def _split_last(G: SparsePoly, last: str):
    """{power of ``last``: coefficient poly in the other variables}."""
    others = tuple(v for v in G.vars if v != last)
    parts = G.coeffs_in((last,))
    return {e[0]: c.with_vars(others) for e, c in parts.items()}, others


def quartic_invariants(g: SparsePoly, X: str, Y: str):
    """(I, J) of the binary quartic a X^4 + b X^3 Y + c X^2 Y^2 + d X Y^3 + e Y^4."""
    co = [g.coefficient({X: 4 - i, Y: i}) for i in range(5)]
    a, b, c, d, e = co
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3
    return normalize(I), normalize(J)


def quartic_jacobian(I, J) -> WeierstrassCurve:
    try:
        return WeierstrassCurve.short(-27 * I, -27 * J)
    except SingularCurve as exc:
        raise SingularCubic("binary quartic has a repeated root") from exc


def nagell_reduce(C: PlaneCubicWithPoint) -> WeierstrassCurve:
    """Weierstrass model of a smooth plane cubic with a rational point.

    The marked point is moved to (0:0:1), so that F = F1 z^2 + F2 z + F3 with
    F1 linear.  Completing the square gives the double cover
    (2 F1 z + F2)^2 = F2^2 - 4 F1 F3 of the line of directions through the
    point, a binary quartic whose classical invariants give the Jacobian.
    Because the cubic has a rational point it is its own Jacobian.
    """
    nv = ("X", "Y", "Z")
    G = _move(C.F, C.variables, _basis_through(C.point), nv)
    parts, _ = _split_last(G, "Z")
    if parts.get(3):
        raise SingularCubic("moved point is not on the cubic")
    zero = SparsePoly.const(0, ("X", "Y"))
    F1, F2, F3 = (parts.get(k, zero) for k in (2, 1, 0))
    if not F1:
        raise SingularCubic(f"{C.point} is a singular point of the cubic")
    g = F2 * F2 - 4 * F1 * F3
    return quartic_jacobian(*quartic_invariants(g, "X", "Y"))


def _cross(p, q):
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def project_quadric_intersection(Q: QuadricIntersectionWithPoint) -> PlaneCubicWithPoint:
    """Project {q1 = q2 = 0} from its marked point to a plane cubic.

    With the point at (0:0:0:1) each quadric reads L_i s + Q_i; eliminating
    s gives the cubic L1 Q2 - L2 Q1, and the tangent line at the point maps
    to the plane point L1 = L2 = 0.
    """
    nv = ("X", "Y", "Z", "S")
    M = _basis_through(Q.point)
    split = []
    for q in (Q.q1, Q.q2):
        G = _move(q, Q.variables, M, nv)
        parts, others = _split_last(G, "S")
        if parts.get(2):
            raise DegenerateProjection("marked point is not on both quadrics")
        zero = SparsePoly.const(0, others)
        split.append((parts.get(1, zero), parts.get(0, zero)))
    (L1, Q1), (L2, Q2) = split
    lin = [[L.coefficient({v: 1}) for v in ("X", "Y", "Z")] for L in (L1, L2)]
    pt = tuple(normalize(c) for c in _cross(*lin))
    if not any(pt):
        raise DegenerateProjection("Jacobian has rank < 2 at the marked point")
    cubic = (L1 * Q2 - L2 * Q1).with_vars(("X", "Y", "Z"))
    if not cubic or any(sum(e) != 3 for e in cubic.terms):
        raise DegenerateProjection("projection is not a plane cubic")
    C = PlaneCubicWithPoint(cubic, pt, ("X", "Y", "Z"))
    try:
        nagell_reduce(C)
    except SingularCubic as exc:
        raise DegenerateProjection("projected cubic is singular") from exc
    return C


# ----------------------------------------------------------- j evidence
def raw_fibre(sign: str, T0) -> WeierstrassCurve:
    """Weierstrass model of the genus-one curve cut out before reparametrising T."""
    sign = check_sign(sign)
    if sign == DIRECT:
        F = direct_cubic().subs({"T": T0})
        return nagell_reduce(PlaneCubicWithPoint(F.with_vars(("u", "v", "w")), DIRECT_POINT(T0)))
    q1, q2 = reverse_quadrics()
    uvws = ("u", "v", "w", "s")
    Q = QuadricIntersectionWithPoint(
        q1.subs({"T": T0}).with_vars(uvws), q2.subs({"T": T0}).with_vars(uvws), REVERSE_POINT
    )
    return nagell_reduce(project_quadric_intersection(Q))


# Two readings of "T <- phi(T)": the printed surface at T equals the raw
# curve at phi(T) ("pullback"), or the raw curve at T is the printed one at
# phi(T) ("pushforward").  Each maps a raw parameter to a printed one.
def _phi(sign):
    if sign == DIRECT:
        return lambda T: 2 * T + 3
    return lambda T: fdiv(2 * T - 3, 2 * T + 1)


def _phi_inverse(sign):
    if sign == DIRECT:
        return lambda T0: fdiv(T0 - 3, 2)
    return lambda T0: fdiv(3 + T0, 2 - 2 * T0)


PARAMETER_MAPS = {
    "pullback": lambda sign: _phi_inverse(sign),
    "pushforward": lambda sign: _phi(sign),
}


@dataclass
class JEvidence:
    sign: str
    direction: str | None
    rows: list = field(default_factory=list)  # (raw T0, printed T, j_raw, j_printed, equal)

    @property
    def passed(self) -> bool:
        return self.direction is not None and len(self.rows) >= 3 and all(r[4] for r in self.rows)


def j_evidence(sign: str, raw_params=(1, 4, 5, 7), direction: str | None = None) -> JEvidence:
    """Compare j of the raw fibres with j of the printed surface at matched parameters.

    The direction of the reparametrisation is fixed on the first usable
    parameter and then kept for the rest.  Parameters where either side
    degenerates are skipped.
    """
    sign = check_sign(sign)
    S = surface(sign)
    ev = JEvidence(sign, direction)
    for T0 in raw_params:
        try:
            j_raw = raw_fibre(sign, T0).j
        except (SingularCubic, DegenerateProjection, ValueError, ZeroDivisionError):
            continue
        if ev.direction is None:
            # lock only on a parameter where every candidate can be evaluated
            candidates = {}
            try:
                for name, make in PARAMETER_MAPS.items():
                    candidates[name] = S.specialize(make(sign)(T0)).j
            except (BadSpecialization, ZeroDivisionError):
                continue
            for name, j_pr in candidates.items():
                if j_pr == j_raw:
                    ev.direction = name
                    break
            if ev.direction is None:
                ev.rows.append((T0, None, j_raw, None, False))
                continue
        try:
            Tp = PARAMETER_MAPS[ev.direction](sign)(T0)
            j_pr = S.specialize(Tp).j
        except (BadSpecialization, ZeroDivisionError):
            continue
        ev.rows.append((T0, Tp, j_raw, j_pr, j_raw == j_pr))
    return ev


__all__ = [
    "BadSpecialization",
    "DegenerateProjection",
    "EllipticSurface",
    "JEvidence",
    "MultiplesReport",
    "PlaneCubicWithPoint",
    "QuadricIntersectionWithPoint",
    "SingularCubic",
    "TORSION_BOUND",
    "direct_cubic",
    "first_good_fibre",
    "j_evidence",
    "nagell_reduce",
    "project_quadric_intersection",
    "quartic_invariants",
    "quartic_jacobian",
    "raw_fibre",
    "reverse_quadrics",
    "section_multiples",
    "substitution_identities",
    "surface",
]
