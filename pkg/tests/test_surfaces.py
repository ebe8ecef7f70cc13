from fractions import Fraction

import pytest
import sympy

from ninecong.algebra import SparsePoly, gens
from ninecong.elliptic import WeierstrassCurve, is_isomorphic
from ninecong.surfaces import (
    TORSION_BOUND,
    BadSpecialization,
    DegenerateProjection,
    PlaneCubicWithPoint,
    QuadricIntersectionWithPoint,
    SingularCubic,
    direct_cubic,
    first_good_fibre,
    j_evidence,
    nagell_reduce,
    project_quadric_intersection,
    raw_fibre,
    reverse_quadrics,
    section_multiples,
    substitution_identities,
    surface,
)

UVW = ("u", "v", "w")
UVWS = ("u", "v", "w", "s")


def weierstrass_cubic(E: WeierstrassCurve):
    X, Y, Z = gens("X Y Z")
    a1, a2, a3, a4, a6 = E.ainvs
    return (Y**2 * Z + a1 * X * Y * Z + a3 * Y * Z**2
            - X**3 - a2 * X**2 * Z - a4 * X * Z**2 - a6 * Z**3).with_vars(("X", "Y", "Z"))


def sympy_j_of_quadric_pair(q1: SparsePoly, q2: SparsePoly, variables):
    """j of the Jacobian of {q1 = q2 = 0} via det(X A + Y B) and its invariants."""
    syms = sympy.symbols(" ".join(variables))
    X, Y = sympy.symbols("X Y")
    e1 = sympy.sympify(str(q1).replace("^", "**"), locals=dict(zip(variables, syms)))
    e2 = sympy.sympify(str(q2).replace("^", "**"), locals=dict(zip(variables, syms)))
    A, B = sympy.hessian(e1, syms), sympy.hessian(e2, syms)
    quartic = sympy.Poly(sympy.expand((X * A + Y * B).det()), X, Y)
    a, b, c, d, e = (quartic.coeff_monomial(X ** (4 - i) * Y**i) for i in range(5))
    I = 12 * a * e - 3 * b * d + c**2
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d**2 - 27 * e * b**2 - 2 * c**3
    return sympy.Rational(1728) * 4 * I**3 / (4 * I**3 - J**2)


# ------------------------------------------------------------- surfaces
@pytest.mark.parametrize("sign", ["direct", "reverse"])
def test_section_lies_on_generic_fibre(sign):
    S = surface(sign)
    assert S.curve.contains(S.section())
    assert S.discriminant


def test_direct_surface_bad_at_zero():
    with pytest.raises(BadSpecialization):
        surface("direct").specialize(0)


def test_reverse_surface_at_zero():
    assert surface("reverse").specialize(0).ainvs[:3] == (-6, 3, -7)


@pytest.mark.parametrize("sign", ["direct", "reverse"])
def test_section_has_infinite_order(sign):
    S = surface(sign)
    T0 = first_good_fibre(S)
    assert T0 == 2
    rep = section_multiples(S, TORSION_BOUND, T0)
    assert rep.certificate
    assert not rep.multiples[0][1].is_infinity


def test_short_multiples_list_is_not_a_certificate():
    assert not section_multiples(surface("direct"), 5, 2).certificate


@pytest.mark.parametrize("sign", ["direct", "reverse"])
def test_substitution_identities(sign):
    res = substitution_identities(sign)
    assert len(res) == 2 and all(res.values()), res


# ----------------------------------------------------------- reduction
def test_fermat_cubic_has_j_zero():
    u, v, w = gens(UVW)
    C = PlaneCubicWithPoint((u**3 + v**3 + w**3).with_vars(UVW), (1, -1, 0))
    E = nagell_reduce(C)
    assert E.j == 0
    assert is_isomorphic(E, WeierstrassCurve.short(0, -432)) is not None


@pytest.mark.parametrize("ainvs", [(0, 0, 1, -1, 0), (1, -1, 0, -3, 7), (0, -1, 1, -10, -20)])
def test_weierstrass_round_trip(ainvs):
    E = WeierstrassCurve(*ainvs)
    C = PlaneCubicWithPoint(weierstrass_cubic(E), (0, 1, 0), ("X", "Y", "Z"))
    assert is_isomorphic(nagell_reduce(C), E) is not None


def test_reduction_from_a_different_rational_point():
    # (0, 0) on y^2 + y = x^3 - x, as a point of the plane cubic
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    C = PlaneCubicWithPoint(weierstrass_cubic(E), (0, 0, 1), ("X", "Y", "Z"))
    assert is_isomorphic(nagell_reduce(C), E) is not None


def test_singular_point_rejected():
    u, v, w = gens(UVW)
    # nodal cubic v^2 w = u^2 (u + w), node at (0:0:1)
    F = (v**2 * w - u**3 - u**2 * w).with_vars(UVW)
    with pytest.raises(SingularCubic):
        nagell_reduce(PlaneCubicWithPoint(F, (0, 0, 1)))


def test_point_must_be_on_cubic():
    u, v, w = gens(UVW)
    with pytest.raises(ValueError):
        PlaneCubicWithPoint((u**3 + v**3 + w**3).with_vars(UVW), (1, 1, 1))


@pytest.mark.parametrize("T0", [2, 3, 5])
def test_quadric_projection_matches_pencil_oracle(T0):
    q1, q2 = reverse_quadrics()
    q1, q2 = (q.subs({"T": T0}).with_vars(UVWS) for q in (q1, q2))
    C = project_quadric_intersection(QuadricIntersectionWithPoint(q1, q2, (2, 1, 1, 0)))
    j = nagell_reduce(C).j
    assert sympy.Rational(j.numerator, j.denominator) == sympy_j_of_quadric_pair(q1, q2, UVWS)


def test_reducible_quadric_pair_is_degenerate():
    u, v, w, s = gens(UVWS)
    q1 = (u * s - v**2).with_vars(UVWS)
    q2 = (w * s - u * v).with_vars(UVWS)
    with pytest.raises(DegenerateProjection):
        project_quadric_intersection(QuadricIntersectionWithPoint(q1, q2, (0, 0, 0, 1)))


def test_quadric_pair_through_a_common_line_is_degenerate():
    u, v, w, s = gens(UVWS)
    q1 = (u * v).with_vars(UVWS)
    q2 = (u * w).with_vars(UVWS)
    with pytest.raises(DegenerateProjection):
        project_quadric_intersection(QuadricIntersectionWithPoint(q1, q2, (0, 0, 0, 1)))


def test_direct_point_on_cubic():
    F = direct_cubic()
    for T0 in (2, 4, Fraction(1, 3)):
        vals = dict(zip(UVW, (12, T0 - 6, -1)), T=T0)
        assert F.evaluate(vals) == 0


def test_direct_fibre_at_one_is_degenerate():
    with pytest.raises(SingularCubic):
        raw_fibre("direct", 1)


# ----------------------------------------------------------- j evidence
@pytest.mark.parametrize("sign", ["direct", "reverse"])
def test_j_evidence(sign):
    ev = j_evidence(sign)
    assert ev.passed
    assert ev.direction == "pullback"
    assert len(ev.rows) >= 3


@pytest.mark.parametrize("sign", ["direct", "reverse"])
def test_wrong_direction_fails(sign):
    assert not j_evidence(sign, direction="pushforward").passed
