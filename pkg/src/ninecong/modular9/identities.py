"""Symbolic identities behind the level-9 models.

Each check returns plain data (booleans plus the computed objects) so the
verification suite can report on it without re-running anything.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import (
    NotDivisible,
    NotInIdeal,
    SparsePoly,
    cofactor_solve_many,
    det,
    det4,
    exact_divide,
    gens,
    hessian,
    in_span,
    matmul,
    poly_substitute,
)
from ..families3 import DIRECT, check_sign, cusp_form
from .models import (
    ABCD,
    GENERIC_FORMS,
    UVWS,
    XYZT,
    short_coefficients_from_torsion,
    torsion_model,
    twisted_model,
    universal_model,
)
from .tangent import lambda_matrix


class FactorizationFailed(ArithmeticError):
    pass


# ------------------------------------------------------------ X(9) Hessian pencil
def hessian_pencil_universal():
    """(det H(t F1 - F2), -48 (t^3 - 1)(a^3 + b^3 + c^3 - 3abc) d)."""
    X = universal_model()
    (t,) = gens("t")
    H = hessian(t * X.F1 - X.F2, ABCD)
    a, b, c, d = gens(ABCD)
    expected = -48 * (t**3 - 1) * (a**3 + b**3 + c**3 - 3 * a * b * c) * d
    return det4(H), expected


# ------------------------------------------------------- scaling identities
SCALING = {
    # sign: (weights for x, y, z, t), (power for F1, power for F2)
    "direct": ((3, 2, 1, 0), (6, 7)),
    "reverse": ((2, 1, 1, 0), (5, 6)),
}


def scaling_identities() -> dict:
    """Check F(lam^2 a, lam^3 b; lam^w x, ...) = lam^k F(a, b; x, ...) for all four forms."""
    (lam,) = gens("lam")
    out = {}
    for sign, (weights, powers) in SCALING.items():
        assign = {"a": lam**2 * gens("a")[0], "b": lam**3 * gens("b")[0]}
        for v, w in zip(XYZT, weights):
            assign[v] = lam**w * SparsePoly.var(v)
        for i, (F, k) in enumerate(zip(GENERIC_FORMS[sign], powers), start=1):
            lhs = poly_substitute(F, assign)
            out[f"F{i} {sign}: lambda^{k}"] = lhs == lam**k * F
    return out


# --------------------------------------------- Hessian of the (r:s) pencil
def hessian_pencil_factorization(sign: str):
    """det H(3r F1 - s F2) = f(r, s) * D(x, y, z, t) over Q[c4, c6].

    Returns ``(f, D, det)``; raises :class:`FactorizationFailed` if the
    division leaves a remainder or the quotient is not a quartic in x,y,z,t.
    """
    sign = check_sign(sign)
    c4, c6, r, s = gens("c4 c6 r s")
    model = twisted_model(-27 * c4, -54 * c6, sign)
    H = hessian(3 * r * model.F1 - s * model.F2, XYZT)
    dH = det4(H)
    f = cusp_form(sign)
    try:
        D = exact_divide(dH, f)
    except NotDivisible as exc:
        raise FactorizationFailed(f"{sign}: determinant not divisible by f") from exc
    if not D.is_homogeneous(XYZT) or D.degree("r") or D.degree("s"):
        raise FactorizationFailed(f"{sign}: quotient is not a form in x, y, z, t alone")
    coeffs = D.coeffs_in(XYZT)
    if any(sum(e) != 4 for e in coeffs):
        raise FactorizationFailed(f"{sign}: quotient is not quartic")
    return f, D, dH


# ------------------------------------------- tangent-line geometric identity
@dataclass
class GeomIdentityResult:
    gamma1: SparsePoly
    gamma2: SparsePoly
    D: SparsePoly
    entries_ok: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.entries_ok) and all(self.entries_ok.values())


def tangent_hessian_identity() -> GeomIdentityResult:
    """Lambda H(F_i) Lambda == gamma_i D (v v^T) mod (F1, F2), entrywise, i = 1, 2."""
    X = universal_model()
    a, b, c, d = gens(ABCD)
    coords = [a, b, c, d]
    g1 = [X.F1.diff(v) for v in ABCD]
    g2 = [X.F2.diff(v) for v in ABCD]
    L = lambda_matrix(g1, g2)
    D = (a**3 + b**3 + c**3 - 3 * a * b * c) * d
    gamma1 = -18 * d**3
    gamma2 = 6 * (a**3 + b**3 + c**3 + 6 * a * b * c)
    res = GeomIdentityResult(gamma1, gamma2, D)
    targets, labels = [], []
    for name, F, gam in (("F1", X.F1, gamma1), ("F2", X.F2, gamma2)):
        prod = matmul(matmul(L, hessian(F, ABCD)), L)
        for i in range(4):
            for j in range(4):
                diff = prod[i][j] - gam * D * coords[i] * coords[j]
                targets.append(diff.with_vars(ABCD))
                labels.append(f"{name}[{i}{j}]")
    nonzero = [(lab, g) for lab, g in zip(labels, targets) if g]
    for lab, g in zip(labels, targets):
        if not g:
            res.entries_ok[lab] = True
    if nonzero:
        try:
            cofactor_solve_many([g for _, g in nonzero], X.forms, None, ABCD)
            for lab, _ in nonzero:
                res.entries_ok[lab] = True
        except NotInIdeal:
            # fall back to per-entry solving to report which entries fail
            for lab, g in nonzero:
                try:
                    cofactor_solve_many([g], X.forms, None, ABCD)
                    res.entries_ok[lab] = True
                except NotInIdeal:
                    res.entries_ok[lab] = False
    return res


# ------------------------------------------------ the 4x4 bridge matrices
def bridge_matrix(t_E, disc, sign: str):
    """(u, v, w, s)^T = M (x, y, z, t)^T relating the torsion and short models."""
    sign = check_sign(sign)
    tE, D = t_E, disc
    if sign == DIRECT:
        return [
            [1, -3 * tE**2, 12 * D * tE - 3 * tE**4, 36 * D * tE**3 - 9 * tE**6],
            [0, -12 * tE, 24 * D + 12 * tE**3, -216 * D * tE**2],
            [0, -12, 36 * tE**2, -144 * D * tE - 72 * tE**4],
            [1, 9 * tE**2, -36 * D * tE + 9 * tE**4, 96 * D**2 + 132 * D * tE**3 + 15 * tE**6],
        ]
    return [
        [D * tE, -12 * D**2 + 12 * D * tE**3, -4 * D**2 + 7 * D * tE**3, -12 * D**2 * tE**2 + 3 * D * tE**5],
        [-2 * D, 0, -6 * D * tE**2, 18 * D * tE**4],
        [tE**2, 0, 4 * D * tE - tE**4, -16 * D**2 + 8 * D * tE**3 - tE**6],
        [-D * tE, -4 * D**2 + 4 * D * tE**3, -4 * D**2 + D * tE**3, 12 * D**2 * tE**2 - 3 * D * tE**5],
    ]


def bridge_determinant_expected(t_E, disc, sign: str):
    if check_sign(sign) == DIRECT:
        return -(2**10) * 3**3 * (t_E**3 - disc) ** 3
    return 2**10 * disc**3 * (t_E**3 - disc) ** 4


@dataclass
class BridgeReport:
    sign: str
    determinant: SparsePoly
    determinant_ok: bool
    span: list  # per transformed cubic: (denominator, [numerators]) or None
    change_of_basis_det: object = None

    @property
    def passed(self) -> bool:
        return self.determinant_ok and all(s is not None for s in self.span) and bool(
            self.change_of_basis_det
        )


def torsion_bridge(sign: str, t_E=None, disc=None) -> BridgeReport:
    """Check the change of coordinates between the torsion and short models.

    With ``t_E``/``disc`` omitted the check runs symbolically over Q[t_E, Delta].
    """
    sign = check_sign(sign)
    if t_E is None:
        t_E, disc = gens("tE Delta")
    M = bridge_matrix(t_E, disc, sign)
    d = det(M)
    expected = bridge_determinant_expected(t_E, disc, sign)
    tors = torsion_model(t_E, disc, sign)
    xs = [SparsePoly.var(v, XYZT) for v in XYZT]
    images = {}
    for v, row in zip(UVWS, M):
        img = SparsePoly.const(0, XYZT)
        for m, x in zip(row, xs):
            img = img + m * x
        images[v] = img
    transformed = []
    for G in tors.forms:
        full = {v: images.get(v, SparsePoly.var(v)) for v in G.vars}
        transformed.append(poly_substitute(G, full))
    a, b = short_coefficients_from_torsion(t_E, disc)
    target = twisted_model(a, b, sign)
    spans = [in_span(G, list(target.forms), XYZT) for G in transformed]
    cob = None
    if all(s is not None for s in spans):
        (d1, (n11, n12)), (d2, (n21, n22)) = spans
        # change-of-basis matrix is [[n11/d1, n12/d1], [n21/d2, n22/d2]]
        cob = n11 * n22 - n12 * n21
    return BridgeReport(sign, d, d == expected, spans, cob)


def scale_check_model(a, b, lam, sign: str) -> bool:
    """twisted_model(lam^2 a, lam^3 b) is twisted_model(a, b) rescaled, for concrete values."""
    weights, powers = SCALING[check_sign(sign)]
    big = twisted_model(lam**2 * a, lam**3 * b, sign)
    small = twisted_model(a, b, sign)
    M = [[Fraction(0)] * 4 for _ in range(4)]
    for i, w in enumerate(weights):
        M[i][i] = lam**w
    moved = big.transform(M)
    return moved.F1 == lam ** powers[0] * small.F1 and moved.F2 == lam ** powers[1] * small.F2
