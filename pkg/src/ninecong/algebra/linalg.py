"""Exact linear algebra over whatever field the entries live in.

Everything here is generic: entries only need ``+ - *``, a truth value and
division via :func:`~ninecong.algebra.scalars.fdiv` (ints are promoted to
``Fraction`` rather than floats).
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .poly import SparsePoly
from .scalars import fdiv, normalize


class NotInIdeal(ArithmeticError):
    """No cofactors exist within the searched degree (not a proof of non-membership)."""


def det(M: Sequence[Sequence]):
    """Determinant by Laplace expansion along the first row (division free).

    Works over any commutative ring, including polynomial entries.  Minors are
    memoised on their column sets, so a 4x4 costs 6 + 4 products.
    """
    n = len(M)
    if n == 0:
        return 1
    memo: dict = {}

    def minor(row, cols):
        if row == n:
            return 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = 0
        for k, c in enumerate(cols):
            a = M[row][c]
            if not a:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            if isinstance(sub, int) and sub == 0:
                continue
            term = a * sub
            total = total + term if k % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def det4(M) -> SparsePoly:
    """Exact determinant of a 4x4 polynomial matrix."""
    if len(M) != 4 or any(len(r) != 4 for r in M):
        raise ValueError("det4 expects a 4x4 matrix")
    d = det(M)
    if not isinstance(d, SparsePoly):
        d = SparsePoly.const(d)
    return d


def matmul(A, B):
    return [[_dot(row, col) for col in zip(*B)] for row in A]


def matvec(A, v):
    return [_dot(row, v) for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


def _dot(u, v):
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def rank(M) -> int:
    """Rank over the field of fractions of the entries (scalar entries only)."""
    rows = [list(r) for r in M]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = fdiv(rows[i][c], p)
                rows[i] = [normalize(x - f * y) for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def solve_square(A, b):
    """Solve ``A x = b`` for square invertible ``A``."""
    sol = solve_sparse(
        [{j: a for j, a in enumerate(row) if a} for row in A],
        [{i: bi for i, bi in enumerate(b) if bi}],
        len(A[0]),
    )[0]
    if sol is None:
        raise ZeroDivisionError("singular system")
    return [sol.get(j, 0) for j in range(len(A[0]))]


def solve_sparse(rows: list[dict], rhs_list: list[dict], ncols: int):
    """Solve ``A x = b`` for several right-hand sides at once.

    ``rows`` are the equations as ``{column: coefficient}``; each rhs is
    ``{row index: value}``.  Returns one solution dict per rhs (free
    variables set to zero), or ``None`` where the system is inconsistent.
    """
    nr = len(rows)
    k = len(rhs_list)
    work = [dict(r) for r in rows]
    aug = [{j: rhs[i] for j, rhs in enumerate(rhs_list) if i in rhs} for i in range(nr)]
    pivots = []  # (row, col)
    used = [False] * nr
    # columns indexed by which rows touch them to keep elimination sparse
    for col in range(ncols):
        best = None
        for i in range(nr):
            if not used[i] and work[i].get(col):
                if best is None or len(work[i]) < len(work[best]):
                    best = i
        if best is None:
            continue
        used[best] = True
        prow, paug = work[best], aug[best]
        inv_scale = prow[col]
        for i in range(nr):
            if i == best:
                continue
            c = work[i].get(col)
            if not c:
                continue
            f = fdiv(c, inv_scale)
            wi, ai = work[i], aug[i]
            for j, v in prow.items():
                nv = normalize(wi.get(j, 0) - f * v)
                if nv:
                    wi[j] = nv
                else:
                    wi.pop(j, None)
            for j, v in paug.items():
                nv = normalize(ai.get(j, 0) - f * v)
                if nv:
                    ai[j] = nv
                else:
                    ai.pop(j, None)
        pivots.append((best, col))
    results = []
    for j in range(k):
        bad = any(not used[i] and aug[i].get(j) for i in range(nr))
        if bad:
            results.append(None)
            continue
        sol = {}
        for i, col in pivots:
            v = aug[i].get(j)
            if v:
                sol[col] = fdiv(v, work[i][col])
        results.append(sol)
    return results


def monomials(nvars: int, degree: int):
    """All exponent vectors of the given total degree, in decreasing grlex order."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def cofactor_solve(g: SparsePoly, basis: Sequence[SparsePoly], degree_bound: int | None = None,
                   variables: Sequence[str] | None = None):
    """Write ``g = sum A_i * basis[i]`` with homogeneous cofactors.

    ``variables`` are the homogeneous (main) variables; any other variable
    appearing in the polynomials is an error because the system is solved
    over the coefficient field.  Cofactor degrees are ``deg g - deg F_i``,
    which is forced for homogeneous identities; ``degree_bound`` only
    guards against asking for more than the caller allows.

    Raises :class:`NotInIdeal` if no solution exists.
    """
    return cofactor_solve_many([g], basis, degree_bound, variables)[0]


def cofactor_solve_many(gs: Sequence[SparsePoly], basis: Sequence[SparsePoly],
                        degree_bound: int | None = None, variables: Sequence[str] | None = None):
    """Batch form of :func:`cofactor_solve` for targets of one common degree."""
    if variables is None:
        variables = []
        for p in list(gs) + list(basis):
            for v in p.vars:
                if v not in variables:
                    variables.append(v)
    variables = tuple(variables)
    basis = [F.with_vars(variables) for F in basis]
    gs = [g.with_vars(variables) for g in gs]
    nonzero = [g for g in gs if g]
    if not nonzero:
        return [tuple(SparsePoly.const(0, variables) for _ in basis) for _ in gs]
    dg = nonzero[0].degree()
    for g in nonzero:
        if not g.is_homogeneous() or g.degree() != dg:
            raise ValueError("cofactor_solve_many needs homogeneous targets of one degree")
    for F in basis:
        if not F.is_homogeneous():
            raise ValueError("basis forms must be homogeneous")
    nv = len(variables)
    columns = []  # (basis index, monomial)
    for bi, F in enumerate(basis):
        d = dg - F.degree()
        if degree_bound is not None and d > degree_bound:
            raise NotInIdeal(f"cofactor degree {d} exceeds bound {degree_bound}")
        if d < 0:
            continue
        for m in monomials(nv, d):
            columns.append((bi, m))
    row_index: dict = {}
    rows: list[dict] = []
    for ci, (bi, m) in enumerate(columns):
        for e, c in basis[bi].terms.items():
            key = tuple(a + b for a, b in zip(e, m))
            ri = row_index.get(key)
            if ri is None:
                ri = row_index[key] = len(rows)
                rows.append({})
            rows[ri][ci] = c
    rhs_list = []
    for g in gs:
        rhs = {}
        for e, c in g.terms.items():
            ri = row_index.get(e)
            if ri is None:
                ri = row_index[e] = len(rows)
                rows.append({})
            rhs[ri] = c
        rhs_list.append(rhs)
    sols = solve_sparse(rows, rhs_list, len(columns))
    out = []
    for g, sol in zip(gs, sols):
        if sol is None:
            raise NotInIdeal("no homogeneous cofactors of the required degree")
        cof = [dict() for _ in basis]
        for ci, v in sol.items():
            bi, m = columns[ci]
            cof[bi][m] = v
        out.append(tuple(SparsePoly(variables, c) for c in cof))
    return out


def in_span(target: SparsePoly, forms: Sequence[SparsePoly], main_vars: Sequence[str]):
    """Express ``target`` as a combination of ``forms`` with coefficients free of ``main_vars``.

    Coefficients may be polynomials in the remaining (parameter) variables;
    the combination is found by Cramer's rule on a set of monomials whose
    coefficient minor is nonzero, then verified as a polynomial identity.
    Returns ``(denominator, [numerators])`` with
    ``denominator * target == sum(num_i * forms_i)``, or ``None``.
    """
    main_vars = tuple(main_vars)
    k = len(forms)
    coeff_maps = [F.coeffs_in(main_vars) for F in forms]
    tmap = target.coeffs_in(main_vars)
    monos = sorted(set().union(*[set(c) for c in coeff_maps]) | set(tmap), reverse=True)
    for chosen in combinations(monos, k):
        M = [[coeff_maps[i].get(m, 0) for i in range(k)] for m in chosen]
        D = det(M)
        if not D:
            continue
        nums = []
        for i in range(k):
            Mi = [row[:i] + [tmap.get(m, 0)] + row[i + 1:] for row, m in zip(M, chosen)]
            nums.append(det(Mi))
        lhs = D * target
        rhs = sum((n * F for n, F in zip(nums, forms)), 0 * target)
        if lhs == rhs:
            return D, nums
        return None
    return None
