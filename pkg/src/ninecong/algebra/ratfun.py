"""Rational functions in one variable over Q."""
from __future__ import annotations

from fractions import Fraction

from .poly import SparsePoly
from .scalars import fdiv, normalize


def _dense(p: SparsePoly, var: str) -> list:
    if not p:
        return []
    p = p.with_vars((var,))
    out = [0] * (p.degree() + 1)
    for (k,), c in p.terms.items():
        out[k] = c
    return out


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _divmod(a: list, b: list):
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            f = fdiv(c, lead)
            q[i] = f
            for j, bj in enumerate(b):
                a[i + j] = normalize(a[i + j] - f * bj)
    return _trim(q), _trim(a[: len(b) - 1])


def _monic(a: list) -> list:
    lead = a[-1]
    return [fdiv(c, lead) for c in a]


def poly_gcd(a: list, b: list) -> list:
    """Monic gcd of dense univariate polynomials over Q."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a) if a else []


class RatFun:
    """Element of Q(T) kept as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var: str = "T"):
        if not isinstance(num, SparsePoly):
            num = SparsePoly.const(num, (var,))
        if not isinstance(den, SparsePoly):
            den = SparsePoly.const(den, (var,))
        for p in (num, den):
            extra = set(p.used_vars()) - {var}
            if extra:
                raise ValueError(f"RatFun in {var} got variables {sorted(extra)}")
        n, d = _dense(num, var), _dense(den, var)
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if n:
            g = poly_gcd(n, d)
            if len(g) > 1:
                n = _divmod(n, g)[0]
                d = _divmod(d, g)[0]
        else:
            d = [1]
        lead = d[-1]
        n = [fdiv(c, lead) for c in n]
        d = [fdiv(c, lead) for c in d]
        self.var = var
        self.num = SparsePoly.from_coeffs(n, var)
        self.den = SparsePoly.from_coeffs(d, var)

    @classmethod
    def gen(cls, var: str = "T") -> "RatFun":
        return cls(SparsePoly.var(var), 1, var)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun(other, 1, self.var)
        if isinstance(other, SparsePoly):
            return RatFun(other, 1, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den, self.var)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * o.den, self.den * o.num, self.var)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(self.den ** (-n), self.num ** (-n), self.var)
        return RatFun(self.num ** n, self.den ** n, self.var)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value):
        d = self.den.evaluate({self.var: value})
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at {self.var}={value}")
        return fdiv(self.num.evaluate({self.var: value}), d)

    def compose(self, other: "RatFun") -> "RatFun":
        """``self(other(T))``."""
        n = _dense(self.num, self.var)
        d = _dense(self.den, self.var)
        return _horner(n, other) / _horner(d, other)

    def degree(self) -> int:
        return max(self.num.degree(), self.den.degree())

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        if self.den == 1:
            return self.num.to_str()
        return f"({self.num.to_str()})/({self.den.to_str()})"


def _horner(coeffs: list, x: RatFun) -> RatFun:
    acc = RatFun(0, 1, x.var)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
