"""The SL_2(Z/9) action on X(9) and invariance of the forgetful map."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import CycScalar, NotInIdeal, SparsePoly, cofactor_solve, matmul, poly_substitute
from .models import ABCD, forget_numerator_denominator, universal_model


def _z9(k):
    return CycScalar.zeta(9, k)


def _z3(k):
    return CycScalar.zeta(3, k)


def rho_S():
    """rho(S) with entries zeta_9^i - zeta_9^(9-i), as printed."""
    e = lambda i, j: _z9(i) - _z9(j)  # noqa: E731
    A, B, C, D = e(1, 8), e(7, 2), e(4, 5), e(3, 6)
    return [
        [A, B, C, D],
        [B, C, A, D],
        [C, A, B, D],
        [D, D, D, CycScalar(9, [0])],
    ]


def rho_T():
    zero = CycScalar(9, [0])
    diag = [_z9(1), _z9(4), _z9(7), _z9(6)]
    return [[diag[i] if i == j else zero for j in range(4)] for i in range(4)]


def kernel_generators():
    """Matrices of the three generators of ker(SL_2(Z/9) -> SL_2(Z/3))."""
    one, zero = CycScalar(3, [1]), CycScalar(3, [0])
    z = _z3(1)
    g1 = [[one, zero, zero, zero], [zero, one, zero, zero], [zero, zero, one, zero], [zero, zero, zero, z]]
    g2 = [[zero, one, zero, zero], [zero, zero, one, zero], [one, zero, zero, zero], [zero, zero, zero, one]]
    g3 = [[z, one, one, zero], [one, z, one, zero], [one, one, z, zero], [zero, zero, zero, z - 1]]
    return {"scale d by zeta_3": g1, "cyclic (a,b,c) -> (b,c,a)": g2, "Hesse-type mix": g3}


def apply_matrix(F: SparsePoly, M, coords=ABCD) -> SparsePoly:
    """F(M v) where v is the coordinate column vector."""
    xs = [SparsePoly.var(v, coords) for v in coords]
    images = {}
    for v, row in zip(coords, M):
        img = SparsePoly.const(0, coords)
        for m, x in zip(row, xs):
            if m:
                img = img + m * x
        images[v] = img
    return poly_substitute(F, images)


def preserves_ideal(M, model=None) -> bool:
    model = model or universal_model()
    try:
        for F in model.forms:
            cofactor_solve(apply_matrix(F, M, model.coords), model.forms, 0, model.coords)
    except NotInIdeal:
        return False
    return True


def is_projectively_identity(M) -> bool:
    c = M[0][0]
    if not c:
        return False
    return all(
        (M[i][j] == (c if i == j else 0)) for i in range(len(M)) for j in range(len(M))
    )


def projective_order(M, limit: int = 12):
    P = M
    for n in range(1, limit + 1):
        if is_projectively_identity(P):
            return n
        P = matmul(P, M)
    return None


def forget_invariant(M) -> bool:
    """N(Mv) D(v) - N(v) D(Mv) lies in (F1, F2), i.e. t o g = t on X(9)."""
    model = universal_model()
    N, D = forget_numerator_denominator()
    gN, gD = apply_matrix(N, M), apply_matrix(D, M)
    diff = gN * D - N * gD
    if not diff:
        return True
    try:
        cofactor_solve(diff, model.forms, None, model.coords)
    except NotInIdeal:
        return False
    return True


@dataclass
class ActionReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self):
        return [k for k, v in self.checks.items() if not v]


def sl2_action_check() -> ActionReport:
    rep = ActionReport()
    rep.checks["rho(S) preserves ideal"] = preserves_ideal(rho_S())
    rep.checks["rho(T) preserves ideal"] = preserves_ideal(rho_T())
    S, T = rho_S(), rho_T()
    rep.checks["rho(S) symmetric"] = all(S[i][j] == S[j][i] for i in range(4) for j in range(4))
    rep.checks["rho(T) symmetric"] = all(T[i][j] == T[j][i] for i in range(4) for j in range(4))
    for name, g in kernel_generators().items():
        rep.checks[f"{name}: preserves ideal"] = preserves_ideal(g)
        rep.checks[f"{name}: order 3 projectively"] = projective_order(g) == 3
        rep.checks[f"{name}: forgetful map invariant"] = forget_invariant(g)
    return rep
