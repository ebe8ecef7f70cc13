from fractions import Fraction

import pytest

from ninecong.algebra import det, exact_divide, gens, hessian
from ninecong.elliptic import CurvePoint, WeierstrassCurve, ap, is_isomorphic, primes_up_to
from ninecong.families3 import (
    HessePoint,
    NotThreeTorsion,
    SingularFiber,
    cusp_form,
    family_discriminant,
    hesse_coefficients,
    hesse_family,
    reduce_power_rules,
    to_torsion_form,
    torsion3_family,
    torsion3_to_hesse,
    torsion_basis_symbolic,
)


def congruent_mod(E1, E2, n, bound):
    for p in primes_up_to(bound):
        if n % p == 0:
            continue
        try:
            t1, t2 = ap(E1, p), ap(E2, p)
        except ValueError:
            continue
        if (t1 - t2) % n:
            return False
    return True


def test_direct_identity_fibre():
    assert hesse_coefficients(7, 11, HessePoint(1, 0), "direct") == (7, 11)


def test_reverse_at_zero_one():
    c4, c6 = 7, 11
    D = c4**3 - c6**2
    A, B = hesse_coefficients(c4, c6, HessePoint(0, 1), "reverse")
    assert A == Fraction(12 * c4**2, D)
    assert B == Fraction(-8 * (9 * c4**3 * c6 - 8 * c6**3), D**2)


@pytest.mark.parametrize("sign", ["direct", "reverse"])
@pytest.mark.parametrize("rs", [(1, 1), (2, -1), (0, 1), (1, 3)])
def test_family_members_are_3_congruent(sign, rs):
    E = WeierstrassCurve.short(-1, 0)
    try:
        E2 = hesse_family(E.c4, E.c6, HessePoint(*rs), sign)
    except SingularFiber:
        pytest.skip("cusp")
    assert congruent_mod(E.short_model(), E2, 3, 300)


def test_cusp_form_leading_terms():
    r, s, c4, c6 = gens("r s c4 c6")
    assert cusp_form("direct").subs({"r": 1, "s": 0}) == 1
    assert cusp_form("reverse").subs({"r": 1, "s": 0}) == c4


@pytest.mark.parametrize("sign", ["direct", "reverse"])
def test_discriminant_divisible_by_cusp_form(sign):
    exact_divide(family_discriminant(sign), cusp_form(sign))


def test_cusp_gives_singular_fibre():
    # c4 = 0, c6 = 1: f_+ = r^4 - 8 r s^3 vanishes at (2 : 1)
    with pytest.raises(SingularFiber):
        hesse_family(0, 1, HessePoint(2, 1), "direct")


def test_torsion3_family_identity_fibre():
    E = torsion3_family(2, 5, 2, "direct")
    assert E.ainvs == (6, 0, 3, 0, 0)


def test_torsion3_family_special_member():
    assert torsion3_family(0, 1, 0, "direct").ainvs == (0, 0, -1, 0, 0)


@pytest.mark.parametrize("sign", ["direct", "reverse"])
@pytest.mark.parametrize("a1,a3,t", [(1, 1, 2), (2, -1, Fraction(1, 2)), (0, 3, 5), (5, 2, -3)])
def test_torsion_family_matches_hesse_family(sign, a1, a3, t):
    E = WeierstrassCurve(a1, 0, a3, 0, 0)
    disc = a3**3 * (a1**3 - 27 * a3)
    assert E.discriminant == disc
    E1 = torsion3_family(None, disc, t, sign)
    E2 = hesse_family(E.c4, E.c6, torsion3_to_hesse(a1, a3, t, sign), sign)
    assert is_isomorphic(E1, E2) is not None


def test_to_torsion_form_sign_of_discriminant():
    E = WeierstrassCurve(0, 0, -1, 0, 0)
    T3, _ = to_torsion_form(E, CurvePoint(0, 0))
    assert (T3.a1, T3.a3) == (0, -1)
    assert T3.discriminant == -27


def test_to_torsion_form_moves_point():
    # old (x, y) = (x' - 2, y' + x' - 3), so (0, 0) becomes (2, 1)
    E0 = WeierstrassCurve(0, 0, -1, 0, 0)
    E = E0.change_coordinates(1, -2, 1, -3)
    T = CurvePoint(2, 1)
    assert E.contains(T)
    T3, tr = to_torsion_form(E, T)
    assert tr.apply(T) == CurvePoint(0, 0)
    assert is_isomorphic(T3.curve(), E) is not None


def test_to_torsion_form_rejects_non_torsion():
    E = WeierstrassCurve(0, 0, 1, -1, 0)
    with pytest.raises(NotThreeTorsion):
        to_torsion_form(E, CurvePoint(0, 0))


def test_second_torsion_generator_is_a_flex():
    F, P, rules = torsion_basis_symbolic()
    X, Y, Z = ("X", "Y", "Z")
    images = dict(zip((X, Y, Z), P))
    on_curve = reduce_power_rules(F.subs(images), rules)
    assert not on_curve
    H = det(hessian(F, (X, Y, Z)))
    assert not reduce_power_rules(H.subs(images), rules)
