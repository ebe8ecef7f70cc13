"""Weierstrass curves over Q, F_p and Q(T).

Coefficients are taken from whatever domain is handed in: ``int`` /
``Fraction`` for Q, :class:`~ninecong.algebra.Fp` for F_p,
:class:`~ninecong.algebra.RatFun` for Q(T) and even :class:`SparsePoly` for
symbolic invariant identities (no group law there, only invariants).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

import numpy as np

from .algebra import Fp, RatFun, SparsePoly, as_fraction, fdiv, normalize

AP_PRIME_CAP = 100_000


class SingularCurve(ValueError):
    pass


class BadReduction(ValueError):
    pass


class PrimeTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CurveInvariants:
    c4: object
    c6: object
    disc: object

    @property
    def j_pair(self):
        """j as the pair (c4^3, disc), free of any division."""
        return self.c4 ** 3, self.disc

    @property
    def j(self):
        return _div(self.c4 ** 3, self.disc)


@dataclass(frozen=True)
class CurvePoint:
    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


def _div(a, b):
    if isinstance(a, SparsePoly) or isinstance(b, SparsePoly):
        raise TypeError("division of symbolic polynomials; use j_pair")
    return fdiv(a, b)


def _nz(c) -> bool:
    return bool(c)


class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6")

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0, *, check: bool = True):
        self.a1, self.a2, self.a3, self.a4, self.a6 = (normalize(c) for c in (a1, a2, a3, a4, a6))
        if check and not _nz(self.discriminant):
            raise SingularCurve(f"discriminant vanishes for {self}")

    @classmethod
    def short(cls, a, b, **kw) -> "WeierstrassCurve":
        return cls(0, 0, 0, a, b, **kw)

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def is_short(self) -> bool:
        return not (self.a1 or self.a2 or self.a3)

    # ------------------------------------------------------- invariants
    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self):
        b2 = self.b2
        return b2 * b2 - 24 * self.b4

    @property
    def c6(self):
        b2 = self.b2
        return -(b2 * b2 * b2) + 36 * b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -(b2 * b2 * b8) - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def invariants(self) -> CurveInvariants:
        return CurveInvariants(self.c4, self.c6, self.discriminant)

    @property
    def j(self):
        return self.invariants().j

    # ----------------------------------------------------------- points
    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        a1, a2, a3, a4, a6 = self.ainvs
        lhs = y * y + a1 * x * y + a3 * y
        rhs = x * x * x + a2 * x * x + a4 * x + a6
        return not _nz(lhs - rhs)

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(normalize(x), normalize(y))
        if not self.contains(P):
            raise ValueError(f"{P} is not on {self}")
        return P

    def neg(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        return CurvePoint(P.x, normalize(-P.y - self.a1 * P.x - self.a3))

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        return add(self, P, Q)

    def mul(self, P: CurvePoint, n: int) -> CurvePoint:
        return mul(self, P, n)

    # ------------------------------------------------------ transforms
    def change_coordinates(self, u, r, s, t) -> "WeierstrassCurve":
        """Curve in coordinates with x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        a1, a2, a3, a4, a6 = self.ainvs
        n1 = a1 + 2 * s
        n2 = a2 - s * a1 + 3 * r - s * s
        n3 = a3 + r * a1 + 2 * t
        n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
        n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1
        return WeierstrassCurve(
            fdiv(n1, u), fdiv(n2, u ** 2), fdiv(n3, u ** 3), fdiv(n4, u ** 4), fdiv(n6, u ** 6)
        )

    def short_model(self) -> "WeierstrassCurve":
        """The model y^2 = x^3 - 27 c4 x - 54 c6 (isomorphic with u = 1/6)."""
        return WeierstrassCurve.short(-27 * self.c4, -54 * self.c6)

    def map_coefficients(self, f, **kw) -> "WeierstrassCurve":
        return WeierstrassCurve(*(f(c) for c in self.ainvs), **kw)

    def specialize(self, value, **kw) -> "WeierstrassCurve":
        """Evaluate Q(T) (or Q[T]) coefficients at ``T = value``."""

        def ev(c):
            if isinstance(c, RatFun):
                return c.evaluate(value)
            if isinstance(c, SparsePoly):
                (v,) = c.used_vars() or ("T",)
                return c.evaluate({v: value})
            return c

        try:
            return self.map_coefficients(ev, **kw)
        except ZeroDivisionError as exc:
            raise BadReduction(f"coefficient pole at T={value}") from exc

    def __eq__(self, other):
        return isinstance(other, WeierstrassCurve) and self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    def __repr__(self):
        return f"WeierstrassCurve{tuple(str(c) for c in self.ainvs)}"

    def equation(self) -> str:
        def term(c, mono):
            if not _nz(c):
                return ""
            return f" + ({c}){mono}"

        a1, a2, a3, a4, a6 = self.ainvs
        lhs = "y^2" + term(a1, "xy") + term(a3, "y")
        rhs = "x^3" + term(a2, "x^2") + term(a4, "x") + term(a6, "")
        return f"{lhs} = {rhs}"


# ------------------------------------------------------------- group law
def add(E: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition over any field domain."""
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    a1, a2, a3, a4, a6 = E.ainvs
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if not _nz(x1 - x2):
        if not _nz(y1 + y2 + a1 * x2 + a3):
            return INFINITY
        num = 3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1
        den = 2 * y1 + a1 * x1 + a3
    else:
        num = y2 - y1
        den = x2 - x1
    lam = fdiv(num, den)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(normalize(x3), normalize(y3))


def mul(E: WeierstrassCurve, P: CurvePoint, n: int) -> CurvePoint:
    if n < 0:
        return mul(E, E.neg(P), -n)
    result = INFINITY
    base = P
    while n:
        if n & 1:
            result = add(E, result, base)
        n >>= 1
        if n:
            base = add(E, base, base)
    return result


def torsion_order(E: WeierstrassCurve, P: CurvePoint, bound: int = 12):
    """Smallest n <= bound with nP = O, else None."""
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = add(E, Q, P)
    return None


# ---------------------------------------------------- reduction and a_p
def _to_fraction(c) -> Fraction:
    return as_fraction(c)


def integral_model(E: WeierstrassCurve):
    """Scale to integral coefficients; returns (curve, u) with a_i' = u^i a_i."""
    fr = [_to_fraction(c) for c in E.ainvs]
    u = 1
    for i, c in zip((1, 2, 3, 4, 6), fr):
        # smallest u with u^i * c integral: work prime by prime via the denominator
        d = c.denominator
        if d == 1:
            continue
        for q, e in _factor(d).items():
            need = -(-e // i)
            cur = _valuation(u, q)
            if cur < need:
                u *= q ** (need - cur)
    new = [normalize(c * u ** i) for i, c in zip((1, 2, 3, 4, 6), fr)]
    return WeierstrassCurve(*new), u


def _valuation(n: int, q: int) -> int:
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def _factor(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def reduce_mod_p(E: WeierstrassCurve, p: int) -> WeierstrassCurve:
    fr = [_to_fraction(c) for c in E.ainvs]
    if any(c.denominator % p == 0 for c in fr):
        raise BadReduction(f"p={p} divides a coefficient denominator")
    Ep = WeierstrassCurve(*(Fp(c, p) for c in fr), check=False)
    if not Ep.discriminant:
        raise BadReduction(f"p={p} divides the discriminant of the given model")
    return Ep


@lru_cache(maxsize=512)
def _chi_table(p: int) -> np.ndarray:
    chi = np.full(p, -1, dtype=np.int64)
    x = np.arange(p, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    return chi


def ap(E: WeierstrassCurve, p: int) -> int:
    """Trace of Frobenius p + 1 - #E(F_p) by naive counting."""
    if p > AP_PRIME_CAP:
        raise PrimeTooLarge(f"p={p} exceeds the naive counting cap {AP_PRIME_CAP}")
    Ep = reduce_mod_p(E, p)
    if p == 2:
        a1, a2, a3, a4, a6 = (c.v for c in Ep.ainvs)
        count = 1
        for x in range(2):
            for y in range(2):
                if (y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6) % 2 == 0:
                    count += 1
        return p + 1 - count
    b2, b4, b6 = (int(c) for c in (Ep.b2, Ep.b4, Ep.b6))
    x = np.arange(p, dtype=np.int64)
    f = (4 * x) % p
    f = (f + b2) % p
    f = (f * x) % p
    f = (f + 2 * b4) % p
    f = (f * x) % p
    f = (f + b6) % p
    return int(-_chi_table(p)[f].sum())


def count_points(E: WeierstrassCurve, p: int) -> int:
    return p + 1 - ap(E, p)


def enumerate_points(E: WeierstrassCurve):
    """All points of a curve over F_p (brute force; small p only)."""
    p = E.a1.p if isinstance(E.a1, Fp) else next(c.p for c in E.ainvs if isinstance(c, Fp))
    pts = [INFINITY]
    for xv in range(p):
        for yv in range(p):
            P = CurvePoint(Fp(xv, p), Fp(yv, p))
            if E.contains(P):
                pts.append(P)
    return pts


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = False
    return [int(q) for q in np.nonzero(sieve)[0]]


# ------------------------------------------------------------ isomorphism
def _rational_root(q: Fraction, n: int):
    if q < 0:
        if n % 2 == 0:
            return None
        r = _rational_root(-q, n)
        return None if r is None else -r
    a, b = _int_root(q.numerator, n), _int_root(q.denominator, n)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _int_root(m: int, n: int):
    if m < 0:
        return None
    lo, hi = 0, 1
    while hi ** n <= m:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** n <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** n == m else None


def is_isomorphic(E1: WeierstrassCurve, E2: WeierstrassCurve):
    """Positive rational u with c4(E2) = u^4 c4(E1), c6(E2) = u^6 c6(E1), or None."""
    c4a, c6a = as_fraction(E1.c4), as_fraction(E1.c6)
    c4b, c6b = as_fraction(E2.c4), as_fraction(E2.c6)
    if (c4a == 0) != (c4b == 0) or (c6a == 0) != (c6b == 0):
        return None
    if c4a and c6a:
        u2 = (c6b / c6a) / (c4b / c4a)
        u = _rational_root(u2, 2)
        if u is None or u ** 4 * c4a != c4b or u ** 6 * c6a != c6b:
            return None
        return normalize(u)
    if c4a:
        u = _rational_root(c4b / c4a, 4)
    else:
        u = _rational_root(c6b / c6a, 6)
    return None if u is None else normalize(u)


def quadratic_twist(E: WeierstrassCurve, d) -> WeierstrassCurve:
    """Twist of the short model: (c4, c6) -> (d^2 c4, d^3 c6)."""
    return WeierstrassCurve.short(-27 * d * d * E.c4, -54 * d ** 3 * E.c6)


def reduced_short_model(E: WeierstrassCurve, trial_bound: int = 10_000) -> WeierstrassCurve:
    """Integral y^2 = x^3 + Ax + B isomorphic to E, with small-prime scalings removed.

    Only primes below ``trial_bound`` are divided out, so the result is
    minimal away from any larger prime.
    """
    A = -27 * _to_fraction(E.c4)
    B = -54 * _to_fraction(E.c6)
    S, _ = integral_model(WeierstrassCurve.short(A, B))
    A, B = int(S.a4), int(S.a6)
    for q in primes_up_to(trial_bound):
        while A % q**4 == 0 and B % q**6 == 0:
            A //= q**4
            B //= q**6
    return WeierstrassCurve.short(A, B)
