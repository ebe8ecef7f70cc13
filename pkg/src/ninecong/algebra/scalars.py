"""Coefficient domains: rationals, prime-field residues and cyclotomic quotients.

Rationals are plain ``int`` / ``fractions.Fraction`` values.  Integral
fractions are collapsed back to ``int`` by :func:`normalize` so that the
polynomial kernel stays on the fast integer path whenever it can.
"""
from __future__ import annotations

from fractions import Fraction


def normalize(c):
    """Collapse an integral ``Fraction`` to ``int``; leave everything else alone."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"not a rational: {c!r}")


def fdiv(a, b):
    """Field division that never falls back to floats."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return normalize(Fraction(a, b))
    return normalize(a / b)


def is_rational(c) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


def format_rational(c) -> str:
    c = as_fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Fp:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        if isinstance(v, Fraction):
            v = v.numerator * pow(v.denominator, -1, p)
        self.v = int(v) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing residues modulo different primes")
            return other.v
        if isinstance(other, (int, Fraction)):
            return Fp(other, self.p).v
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == Fp(other, self.p).v
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


_PHI = {3: 2, 9: 6}


class CycScalar:
    """Element of Q[zeta]/(Phi_m(zeta)) for m in {3, 9}.

    ``coords[k]`` is the coefficient of ``zeta**k``.  Values with different
    moduli are combined in Q(zeta_9) via zeta_3 = zeta_9**3.
    """

    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords):
        if m not in _PHI:
            raise ValueError("cyclotomic modulus must be 3 or 9")
        coords = [normalize(as_fraction(c)) for c in coords]
        n = _PHI[m]
        if len(coords) > n:
            coords = _reduce(m, coords)
        coords += [0] * (n - len(coords))
        self.m = m
        self.coords = tuple(coords)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycScalar":
        k %= m
        return cls(m, [0] * k + [1])

    @classmethod
    def from_rational(cls, m: int, c) -> "CycScalar":
        return cls(m, [c])

    def lift(self, m: int) -> "CycScalar":
        if m == self.m:
            return self
        if self.m == 3 and m == 9:
            out = [0] * 6
            out[0], out[3] = self.coords
            return CycScalar(9, out)
        raise ValueError(f"cannot embed Q(zeta_{self.m}) into Q(zeta_{m})")

    def _pair(self, other):
        if isinstance(other, CycScalar):
            m = max(self.m, other.m)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CycScalar.from_rational(self.m, other)
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return CycScalar(a.m, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.m, [-x for x in self.coords])

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return CycScalar(a.m, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.m, [x * other for x in self.coords])
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        prod = [0] * (2 * len(a.coords) - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        prod[i + j] += x * y
        return CycScalar(a.m, _reduce(a.m, prod))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycScalar.from_rational(self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def multiplication_matrix(self):
        """Matrix of x -> self*x on the power basis (columns are images)."""
        n = _PHI[self.m]
        cols = [(self * CycScalar.zeta(self.m, k)).coords for k in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def inverse(self) -> "CycScalar":
        if not self:
            raise ZeroDivisionError("inverse of 0 in cyclotomic field")
        from .linalg import solve_square

        n = _PHI[self.m]
        rhs = [1] + [0] * (n - 1)
        return CycScalar(self.m, solve_square(self.multiplication_matrix(), rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.m, [fdiv(x, other) for x in self.coords])
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycScalar.from_rational(self.m, other) * self.inverse()

    def norm(self):
        """Field norm to Q (determinant of the multiplication matrix)."""
        from .linalg import det

        return det(self.multiplication_matrix())

    def rational_part(self):
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def __eq__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        return pr[0].coords == pr[1].coords

    def __hash__(self):
        c = self.lift(9).coords if self.m == 3 else self.coords
        if not any(c[1:]):
            return hash(c[0])
        return hash(c)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"CycScalar({self.m}, {list(self.coords)})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            cs = format_rational(c)
            if k == 0:
                parts.append(cs)
            else:
                z = f"z{self.m}" if k == 1 else f"z{self.m}^{k}"
                parts.append(z if c == 1 else f"{cs}*{z}")
        return "(" + " + ".join(parts or ["0"]) + ")"


def _reduce(m: int, coords: list) -> list:
    """Reduce a coefficient list modulo Phi_m."""
    coords = list(coords)
    n = _PHI[m]
    step = n // 2  # Phi_3 = z^2+z+1, Phi_9 = z^6+z^3+1
    for k in range(len(coords) - 1, n - 1, -1):
        c = coords[k]
        if c:
            coords[k] = 0
            coords[k - n] -= c
            coords[k - step] -= c
    return coords[:n]
