"""Cubic-pair models in P^3: X(9), X_E(9), X_E^-(9) and the 3-torsion forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from ..algebra import SparsePoly, as_fraction, gens, normalize, poly_substitute
from ..elliptic import SingularCurve
from ..families3 import DIRECT, REVERSE, check_sign

XYZT = ("x", "y", "z", "t")
ABCD = ("a", "b", "c", "d")
UVWS = ("u", "v", "w", "s")


@dataclass(frozen=True)
class ProjPt:
    """A point of P^3 given by four coordinates (scalars or polynomials in T)."""

    coords: tuple

    def __init__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        coords = tuple(normalize(c) for c in coords)
        if not any(coords):
            raise ValueError("all coordinates are zero")
        object.__setattr__(self, "coords", coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def normalized(self) -> "ProjPt":
        """Coprime integers with the first nonzero coordinate positive."""
        fr = [as_fraction(c) for c in self.coords]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        return ProjPt(ints)

    def scaled(self, lam) -> "ProjPt":
        return ProjPt([lam * c for c in self.coords])

    def proportional(self, other) -> bool:
        a, b = list(self.coords), list(other)
        return all(
            not (a[i] * b[j] - a[j] * b[i]) for i in range(len(a)) for j in range(i + 1, len(a))
        )

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class CubicPairModel:
    """The curve {F1 = F2 = 0} in P^3 for two cubic forms in ``coords``."""

    F1: SparsePoly
    F2: SparsePoly
    coords: tuple = XYZT
    tag: str = "universal"
    params: dict = field(default_factory=dict, compare=False)

    @property
    def forms(self):
        return (self.F1, self.F2)

    def evaluate(self, P) -> tuple:
        vals = dict(zip(self.coords, P))
        return tuple(_eval_partial(F, vals) for F in self.forms)

    def contains(self, P) -> bool:
        return not any(self.evaluate(P))

    def gradients(self, P):
        vals = dict(zip(self.coords, P))
        return [[_eval_partial(F.diff(v), vals) for v in self.coords] for F in self.forms]

    def jacobian_rank(self, P) -> int:
        g1, g2 = self.gradients(P)
        minors = [g1[i] * g2[j] - g1[j] * g2[i] for i in range(4) for j in range(i + 1, 4)]
        if any(minors):
            return 2
        return 1 if any(g1) or any(g2) else 0

    def transform(self, M: Sequence[Sequence], tag: str | None = None) -> "CubicPairModel":
        """The model in new coordinates X with old = M X (``coords <- M coords``)."""
        new = [SparsePoly.var(v, self.coords) for v in self.coords]
        images = {}
        for v, row in zip(self.coords, M):
            img = SparsePoly.const(0, self.coords)
            for m, nv in zip(row, new):
                if m:
                    img = img + m * nv
            images[v] = img
        F1 = _subs_keep(self.F1, images)
        F2 = _subs_keep(self.F2, images)
        return CubicPairModel(F1, F2, self.coords, tag or f"{self.tag}*M", dict(self.params))

    def specialize(self, values: dict) -> "CubicPairModel":
        """Evaluate parameter variables (e.g. T) at scalars."""
        F1 = self.F1.subs(values)
        F2 = self.F2.subs(values)
        return CubicPairModel(F1, F2, self.coords, self.tag, dict(self.params))

    def span_equal(self, other: "CubicPairModel") -> bool:
        """Same pencil: each pair spans the other (constant coefficients)."""
        from ..algebra import NotInIdeal, cofactor_solve

        try:
            for G in other.forms:
                cofactor_solve(G, self.forms, 0, self.coords)
            for G in self.forms:
                cofactor_solve(G, other.forms, 0, self.coords)
        except NotInIdeal:
            return False
        return True

    def serialize(self) -> dict:
        return {
            "coords": list(self.coords),
            "tag": self.tag,
            "F1": self.F1.to_str(),
            "F2": self.F2.to_str(),
        }


def _subs_keep(F: SparsePoly, images: dict) -> SparsePoly:
    full = {v: images.get(v, SparsePoly.var(v)) for v in F.vars}
    return poly_substitute(F, full)


def _eval_partial(F: SparsePoly, vals: dict):
    """Evaluate the coordinate variables; parameters (like T) stay symbolic."""
    symbolic = any(isinstance(x, SparsePoly) for x in vals.values())
    if symbolic or set(F.used_vars()) - set(vals):
        out = F.subs(vals)
        return out.constant_value() if out.is_constant() else out
    return F.evaluate(vals)


# ------------------------------------------------------------ the models
def universal_model() -> CubicPairModel:
    a, b, c, d = gens(ABCD)
    F1 = a**2 * b + b**2 * c + c**2 * a
    F2 = a * b**2 + b * c**2 + c * a**2 - d**3
    return CubicPairModel(F1, F2, ABCD, "universal")


def universal_forget(P):
    """t = -(a^3 + b^3 + c^3 + 6abc) / (3 d^3); ``None`` stands for infinity."""
    a, b, c, d = P
    if not d:
        return None
    from ..algebra import fdiv

    return fdiv(-(a**3 + b**3 + c**3 + 6 * a * b * c), 3 * d**3)


def forget_numerator_denominator():
    a, b, c, d = gens(ABCD)
    return -(a**3 + b**3 + c**3 + 6 * a * b * c), 3 * d**3


def _generic_forms(sign: str):
    a, b, x, y, z, t = gens("a b x y z t")
    if sign == DIRECT:
        F1 = (x**2 * t + 6 * x * y * z + 6 * b * x * t**2 + 6 * y**3 - 9 * a * y**2 * t
              + 6 * a**2 * y * t**2 - 3 * b * z**3 + 3 * a**2 * z**2 * t + 9 * a * b * z * t**2
              - (a**3 - 12 * b**2) * t**3)
        F2 = (x**2 * z + 6 * x * y**2 - 6 * a * x * y * t + 2 * a**2 * x * t**2 - 9 * a * y**2 * z
              - 18 * b * y * z**2 + 12 * a**2 * y * z * t + a**2 * z**3 + 9 * a * b * z**2 * t
              - 3 * a**3 * z * t**2 + a**2 * b * t**3)
    else:
        F1 = (9 * x**2 * y + 3 * x**2 * z - 6 * a * x * y * t + 6 * b * x * t**2 - 6 * a * y**3
              + 27 * b * y**2 * t + 3 * a * y * z**2 + 18 * b * y * z * t + 3 * a**2 * y * t**2
              + a * z**3 + 3 * b * z**2 * t + a**2 * z * t**2 - a * b * t**3)
        F2 = (x**3 + 6 * a * x * y * z + 18 * b * x * y * t + 3 * a * x * z**2 + 6 * b * x * z * t
              + a**2 * x * t**2 + 9 * b * y**3 + 6 * a**2 * y**2 * t - 9 * b * y * z**2
              + 6 * a**2 * y * z * t - 3 * a * b * y * t**2 - 4 * b * z**3 + 2 * a**2 * z**2 * t
              + 2 * b**2 * t**3)
    return F1, F2


GENERIC_FORMS = {s: _generic_forms(s) for s in (DIRECT, REVERSE)}


def twisted_model(a, b, sign: str) -> CubicPairModel:
    """X_E^{+-}(9) for E: y^2 = x^3 + a x + b.

    ``a`` and ``b`` may be rationals, polynomials (e.g. in T or in free
    symbols) or ``None`` to keep them as the symbols ``a``, ``b``.
    """
    sign = check_sign(sign)
    F1, F2 = GENERIC_FORMS[sign]
    if a is None and b is None:
        return CubicPairModel(F1, F2, XYZT, sign, {"a": "a", "b": "b"})
    disc = 4 * a**3 + 27 * b**2
    if not disc:
        raise SingularCurve("4a^3 + 27b^2 = 0")
    coords = {v: SparsePoly.var(v, XYZT) for v in XYZT}
    assign = dict(coords, a=a, b=b)
    G1 = poly_substitute(F1, assign)
    G2 = poly_substitute(F2, assign)
    return CubicPairModel(G1, G2, XYZT, sign, {"a": a, "b": b})


def torsion_model(t_E, disc, sign: str) -> CubicPairModel:
    """Models of X(9), X_E(9), X_E^-(9) in (u:v:w:s) for y^2 + 3 t_E xy + (t_E^3 - disc) y = x^3.

    ``sign`` may also be ``"universal"``.
    """
    u, v, w, s = gens(UVWS)
    if sign == "universal":
        F1 = u**2 * v + v**2 * w + w**2 * u - s**3
        F2 = u**2 * w + v**2 * u + w**2 * v
        return CubicPairModel(F1, F2, UVWS, "universal")
    sign = check_sign(sign)
    if not disc:
        raise SingularCurve("discriminant is zero")
    if not (t_E**3 - disc):
        raise SingularCurve("t_E^3 = disc")
    D = disc
    f0 = u**3 + D * v**3 + D**2 * w**3 + 6 * D * u * v * w
    f1 = 3 * (u**2 * v + D * v**2 * w + D * w**2 * u)
    f2 = 3 * (u**2 * w + v**2 * u + D * w**2 * v)
    if sign == DIRECT:
        F1 = f0 - t_E * f1 - s**3
        F2 = f1 - t_E * f2
    else:
        F1 = f0 + t_E * f1 - 9 * s**3
        F2 = D * f2 + 9 * t_E * s**3
    F1 = F1.with_vars(_order(F1.vars))
    F2 = F2.with_vars(_order(F2.vars))
    return CubicPairModel(F1, F2, UVWS, f"torsion-{sign}", {"t_E": t_E, "disc": disc})


def _order(vars_):
    return UVWS + tuple(v for v in vars_ if v not in UVWS)


def short_coefficients_from_torsion(t_E, disc):
    """(a, b) of the short model of y^2 + 3 t_E xy + (t_E^3 - disc) y = x^3."""
    return -24 * disc * t_E - 3 * t_E**4, 16 * disc**2 + 40 * disc * t_E**3 - 2 * t_E**6


def c4_c6_from_short(a, b):
    """(c4, c6) with a = -27 c4 and b = -54 c6."""
    if isinstance(a, SparsePoly):
        return a * Fraction(-1, 27), b * Fraction(-1, 54)
    return normalize(Fraction(-1, 27) * a), normalize(Fraction(-1, 54) * b)
