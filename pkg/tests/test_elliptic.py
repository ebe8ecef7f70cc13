from fractions import Fraction

import pytest

from ninecong.algebra import Fp
from ninecong.elliptic import (
    BadReduction,
    CurvePoint,
    PrimeTooLarge,
    SingularCurve,
    WeierstrassCurve,
    ap,
    enumerate_points,
    integral_model,
    is_isomorphic,
    mul,
    primes_up_to,
    quadratic_twist,
    reduce_mod_p,
    torsion_order,
)

E37 = WeierstrassCurve(0, 0, 1, -1, 0)  # conductor 37
E11 = WeierstrassCurve(0, -1, 1, -10, -20)  # conductor 11
E47775 = WeierstrassCurve(0, -1, 1, -32013, 2215478)


def test_singular_curve_rejected():
    with pytest.raises(SingularCurve):
        WeierstrassCurve.short(0, 0)


def test_invariants_of_y2_eq_x3_minus_x():
    E = WeierstrassCurve.short(-1, 0)
    assert (E.c4, E.c6, E.discriminant, E.j) == (48, 0, 64, 1728)


def test_c4_of_47775z1():
    assert E47775.c4 == 1536640


@pytest.mark.parametrize("p,expected", [(2, -2), (3, -3), (5, -2), (7, -1), (11, -5), (13, -2)])
def test_ap_conductor_37(p, expected):
    assert ap(E37, p) == expected


@pytest.mark.parametrize("p,expected", [(2, -2), (3, -1), (5, 1), (7, -2), (13, 4)])
def test_ap_conductor_11(p, expected):
    assert ap(E11, p) == expected


@pytest.mark.parametrize("E", [E37, E47775])
@pytest.mark.parametrize("p", [2, 11, 17, 19, 23, 29])
def test_ap_matches_brute_force_count(E, p):
    assert ap(E, p) == p + 1 - len(enumerate_points(reduce_mod_p(E, p)))


def test_ap_of_cm_curve_vanishes_at_inert_primes():
    E = WeierstrassCurve.short(-1, 0)
    assert all(ap(E, p) == 0 for p in primes_up_to(200) if p % 4 == 3)


def test_bad_reduction_raises():
    with pytest.raises(BadReduction):
        ap(E37, 37)


def test_prime_cap():
    with pytest.raises(PrimeTooLarge):
        ap(E37, 100_003)


def test_three_torsion_point():
    E = WeierstrassCurve(0, 0, 1, 0, 0)
    P = CurvePoint(0, 0)
    assert mul(E, P, 3).is_infinity
    assert torsion_order(E, P) == 3


def test_group_law_over_fp():
    Ep = reduce_mod_p(E37, 101)
    pts = enumerate_points(Ep)
    n = len(pts)
    assert all(mul(Ep, P, n).is_infinity for P in pts[:20])


def test_integral_model():
    E = WeierstrassCurve(0, 0, 0, Fraction(1, 4), Fraction(1, 8))
    Ei, u = integral_model(E)
    assert all(Fraction(c).denominator == 1 for c in Ei.ainvs)
    assert is_isomorphic(E, Ei) is not None


def test_short_model_is_isomorphic():
    assert is_isomorphic(E47775, E47775.short_model()) == 6


def test_twist_is_not_isomorphic():
    assert is_isomorphic(E37, quadratic_twist(E37, -1)) is None
    assert quadratic_twist(E37, -1).j == E37.j


def test_change_coordinates_preserves_j():
    E = E47775.change_coordinates(Fraction(2, 3), 5, -1, 7)
    assert E.j == E47775.j and is_isomorphic(E47775, E) is not None


def test_fp_coefficients():
    E = WeierstrassCurve(*(Fp(c, 7) for c in (0, 0, 1, -1, 0)))
    assert len(enumerate_points(E)) == 7 + 1 - ap(E37, 7)


def test_reduced_short_model_strips_scaling():
    from ninecong.elliptic import reduced_short_model

    E = WeierstrassCurve(0, -1, 1, -10, -20)
    big = WeierstrassCurve.short(-27 * E.c4 * 14**4, -54 * E.c6 * 14**6)
    R = reduced_short_model(big)
    assert is_isomorphic(R, E) is not None
    assert all(c.denominator == 1 for c in map(Fraction, R.ainvs))
    assert abs(R.a4) < abs(big.a4)
