"""Randomised property checks."""
import itertools
from functools import lru_cache

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from ninecong.algebra import Fp
from ninecong.diophantine import search_points
from ninecong.elliptic import BadReduction, SingularCurve, WeierstrassCurve, ap, enumerate_points
from ninecong.modular9 import (
    CuspPoint,
    DegenerateLambda,
    ProjPt,
    SingularPoint,
    forget9_on_model,
    tangent_direction,
    twisted_model,
    universal_model,
)

SMALL_PRIMES = [29, 31, 37, 41, 43, 47]
coeff = st.integers(-30, 30)
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


# ------------------------------------------------------------ Hasse bound
@SETTINGS
@given(st.tuples(coeff, coeff, coeff, coeff, coeff), st.sampled_from([5, 7, 11, 13, 101, 199, 499]))
def test_hasse_bound(ainvs, p):
    try:
        E = WeierstrassCurve(*ainvs)
        t = ap(E, p)
    except (SingularCurve, BadReduction):
        assume(False)
    assert t * t <= 4 * p


# ------------------------------------------------------ group law over F_p
@lru_cache(maxsize=None)
def fp_curve_points(a, b, p):
    E = WeierstrassCurve(*(Fp(c, p) for c in (0, 0, 0, a, b)))
    return E, list(enumerate_points(E))


@SETTINGS
@given(st.sampled_from(SMALL_PRIMES), coeff, coeff, st.data())
def test_associativity_over_fp(p, a, b, data):
    assume((4 * a**3 + 27 * b**2) % p)
    E, pts = fp_curve_points(a % p, b % p, p)
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
    assert E.add(P, Q) == E.add(Q, P)


# ----------------------------------------- (r:s) over F_p: choice-invariance
def _terms(F, coords, p):
    return [(int(c) % p, tuple(e[F.vars.index(v)] for v in coords)) for e, c in F.terms.items()]


def _eval(terms, pts, p):
    acc = np.zeros(len(pts), dtype=np.int64)
    for c, e in terms:
        term = np.full(len(pts), c, dtype=np.int64)
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * pts[:, i] % p
        acc = (acc + term) % p
    return acc


@lru_cache(maxsize=None)
def fp_model_points(a, b, sign, p):
    """Points of P^3(F_p) on the model, with the model over F_p."""
    model_int = twisted_model(a, b, sign)
    grid = []
    for lead in range(4):
        for rest in itertools.product(range(p), repeat=3 - lead):
            grid.append([0] * lead + [1] + list(rest))
    grid = np.array(grid, dtype=np.int64)
    mask = np.ones(len(grid), dtype=bool)
    for F in model_int.forms:
        mask &= _eval(_terms(F, model_int.coords, p), grid, p) == 0
    model = twisted_model(Fp(a, p), Fp(b, p), sign)
    return model, [tuple(int(c) for c in row) for row in grid[mask]]


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(
    st.sampled_from(SMALL_PRIMES),
    st.integers(1, 20),
    st.integers(1, 20),
    st.sampled_from(["direct", "reverse"]),
    st.data(),
)
def test_forget9_choice_invariance(p, a, b, sign, data):
    assume((4 * a**3 + 27 * b**2) % p)
    model, pts = fp_model_points(a, b, sign, p)
    assume(pts)
    raw = data.draw(st.sampled_from(pts))
    P = [Fp(c, p) for c in raw]
    try:
        Q = list(tangent_direction(model, P))
        base = forget9_on_model(model, P, Q)
    except (SingularPoint, DegenerateLambda, CuspPoint):
        assume(False)
    mu = Fp(data.draw(st.integers(1, p - 1)), p)
    lam = Fp(data.draw(st.integers(1, p - 1)), p)
    shifted = [q + mu * c for q, c in zip(Q, P)]
    assume(not ProjPt(shifted).proportional(P))
    scaled_P = [lam * c for c in P]
    for other in (
        forget9_on_model(model, P, shifted),
        forget9_on_model(model, P, [lam * q for q in Q]),
        forget9_on_model(model, scaled_P),
    ):
        assert other.proportional(base)


# ------------------------------------------------------ search monotonicity
def _unimodular(ops):
    M = [[int(i == j) for j in range(4)] for i in range(4)]
    for i, j, c in ops:
        if i != j:
            for k in range(4):
                M[i][k] += c * M[j][k]
    return M


@settings(max_examples=10, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-1, 1)), max_size=4))
def test_search_monotone_in_height(ops):
    model = universal_model().transform(_unimodular(ops))
    found = [set(search_points(model, H).as_tuples()) for H in (1, 2, 3)]
    assert found[0] <= found[1] <= found[2]
    for P in found[2]:
        assert model.contains(P)


def test_hasse_bound_on_example_curves():
    from ninecong.verify import CASES
    from ninecong.elliptic import primes_up_to

    for case in CASES.values():
        for _, E in case.expected:
            for p in primes_up_to(200):
                try:
                    t = ap(E, p)
                except BadReduction:
                    continue
                assert t * t <= 4 * p
