"""Exact arithmetic kernel."""
from .linalg import (
    NotInIdeal,
    cofactor_solve,
    cofactor_solve_many,
    det,
    det4,
    in_span,
    matmul,
    matvec,
    rank,
    solve_sparse,
    solve_square,
    transpose,
)
from .poly import (
    NotDivisible,
    SparsePoly,
    divides,
    exact_divide,
    gens,
    parse_poly,
    poly_substitute,
)
from .ratfun import RatFun
from .scalars import CycScalar, Fp, as_fraction, fdiv, format_rational, normalize


def hessian(F: SparsePoly, variables) -> list:
    """Matrix of second partial derivatives of ``F``."""
    first = [F.diff(v) for v in variables]
    return [[d.diff(w) for w in variables] for d in first]


__all__ = [
    "CycScalar",
    "Fp",
    "NotDivisible",
    "NotInIdeal",
    "RatFun",
    "SparsePoly",
    "as_fraction",
    "cofactor_solve",
    "cofactor_solve_many",
    "det",
    "det4",
    "divides",
    "exact_divide",
    "fdiv",
    "format_rational",
    "gens",
    "hessian",
    "in_span",
    "matmul",
    "matvec",
    "normalize",
    "parse_poly",
    "poly_substitute",
    "rank",
    "solve_sparse",
    "solve_square",
    "transpose",
]
