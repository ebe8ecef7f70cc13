"""Sparse multivariate polynomials with exact coefficients.

A :class:`SparsePoly` is an immutable map from dense exponent vectors to
nonzero coefficients over an ordered tuple of variable names.  Coefficients
may be ``int``, ``Fraction``, :class:`~ninecong.algebra.scalars.CycScalar` or
:class:`~ninecong.algebra.scalars.Fp`; they only need ring operations and a
truth value.

Binary operations between polynomials over different variable lists first
merge the lists (left operand's order first), so ``x + y`` just works.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import CycScalar, Fp, fdiv, format_rational, normalize


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide`; ``remainder`` is a nonzero witness."""

    def __init__(self, remainder: "SparsePoly"):
        super().__init__("polynomial is not exactly divisible")
        self.remainder = remainder


def _grlex_key(e):
    return (sum(e), e)


class SparsePoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping | None = None, *, _trusted=False):
        self.vars = tuple(variables)
        if _trusted:
            self.terms = terms
        else:
            n = len(self.vars)
            clean = {}
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match {n} variables")
                c = normalize(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
            self.terms = clean
        self._hash = None

    # ----------------------------------------------------------- builders
    @classmethod
    def const(cls, c, variables: Iterable[str] = ()) -> "SparsePoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> "SparsePoly":
        variables = tuple(variables) if variables is not None else (name,)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls(variables, {tuple(e): 1}, _trusted=True)

    @classmethod
    def from_coeffs(cls, coeffs, var: str = "T") -> "SparsePoly":
        """Univariate polynomial from a low-to-high coefficient list."""
        return cls((var,), {(k,): c for k, c in enumerate(coeffs)})

    # --------------------------------------------------------- variables
    def with_vars(self, variables: Iterable[str]) -> "SparsePoly":
        """Re-express over a variable list containing all used variables."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = {v: i for i, v in enumerate(variables)}
        idx = []
        for i, v in enumerate(self.vars):
            if v in pos:
                idx.append((i, pos[v]))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {v} is used but missing from {variables}")
        n = len(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in idx:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return SparsePoly(variables, out, _trusted=True)

    def used_vars(self) -> tuple:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def _unify(self, other: "SparsePoly"):
        if self.vars == other.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(merged), other.with_vars(merged)

    def _lift(self, other):
        if isinstance(other, SparsePoly):
            return self._unify(other)
        if isinstance(other, (int, Fraction, CycScalar, Fp)):
            return self, SparsePoly.const(other, self.vars)
        return None

    # -------------------------------------------------------- arithmetic
    def __add__(self, other):
        pr = self._lift(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = normalize(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return SparsePoly(a.vars, out, _trusted=True)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return SparsePoly(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        pr = self._lift(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            a, b = self._unify(other)
            if len(a.terms) < len(b.terms):
                a, b = b, a
            out = {}
            get = out.get
            for e2, c2 in b.terms.items():
                for e1, c1 in a.terms.items():
                    e = tuple([x + y for x, y in zip(e1, e2)])
                    v = get(e)
                    out[e] = c1 * c2 if v is None else v + c1 * c2
            out = {e: normalize(c) for e, c in out.items() if c}
            return SparsePoly(a.vars, out, _trusted=True)
        pr = self._lift(other)
        if pr is None:
            return NotImplemented
        if not other:
            return SparsePoly(self.vars, {}, _trusted=True)
        out = {}
        for e, c in self.terms.items():
            v = normalize(c * other)
            if v:
                out[e] = v
        return SparsePoly(self.vars, out, _trusted=True)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial."""
        if isinstance(other, SparsePoly):
            return exact_divide(self, other)
        if not other:
            raise ZeroDivisionError("division of a polynomial by zero")
        return SparsePoly(self.vars, {e: fdiv(c, other) for e, c in self.terms.items()}, _trusted=True)

    # -------------------------------------------------------- comparison
    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            a, b = self._unify(other)
            return a.terms == b.terms
        if not other:
            return not self.terms
        pr = self._lift(other)
        if pr is None:
            return NotImplemented
        return self.terms == pr[1].terms

    def __hash__(self):
        if self._hash is None:
            used = self.used_vars()
            p = self.with_vars(used)
            self._hash = hash((used, frozenset(p.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------ inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), 0)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self, variables: Iterable[str] | None = None) -> bool:
        idx = self._indices(variables)
        degs = {sum(e[i] for i in idx) for e in self.terms}
        return len(degs) <= 1

    def _indices(self, variables):
        if variables is None:
            return list(range(len(self.vars)))
        return [self.vars.index(v) for v in variables if v in self.vars]

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def coefficient(self, monomial: Mapping[str, int]):
        e = [0] * len(self.vars)
        for v, k in monomial.items():
            if v not in self.vars:
                return 0 if k else self.terms.get(tuple(e), 0)
            e[self.vars.index(v)] = k
        return self.terms.get(tuple(e), 0)

    def coeffs_in(self, variables: Iterable[str]) -> dict:
        """Split as sum of monomials in ``variables`` times polynomials in the rest.

        Returns ``{exponent tuple over variables: SparsePoly over remaining vars}``.
        """
        variables = tuple(variables)
        main = [self.vars.index(v) if v in self.vars else None for v in variables]
        rest_vars = tuple(v for v in self.vars if v not in variables)
        rest = [self.vars.index(v) for v in rest_vars]
        buckets: dict = {}
        for e, c in self.terms.items():
            key = tuple(e[i] if i is not None else 0 for i in main)
            buckets.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        return {k: SparsePoly(rest_vars, t, _trusted=True) for k, t in buckets.items()}

    def content_gcd(self):
        """Positive gcd of integer coefficients (polynomial must be over Z)."""
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c))
        return g

    def denominator_lcm(self) -> int:
        from math import lcm

        d = 1
        for c in self.terms.values():
            d = lcm(d, Fraction(c).denominator)
        return d

    # ------------------------------------------------------- calculus
    def diff(self, var: str) -> "SparsePoly":
        if var not in self.vars:
            return SparsePoly(self.vars, {}, _trusted=True)
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = normalize(c * k)
        return SparsePoly(self.vars, {e: c for e, c in out.items() if c}, _trusted=True)

    def map_coeffs(self, f) -> "SparsePoly":
        return SparsePoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    # ---------------------------------------------------- substitution
    def subs(self, assignment: Mapping[str, object]) -> "SparsePoly":
        """Partial substitution; unassigned variables are kept."""
        full = {v: assignment.get(v, SparsePoly.var(v)) for v in self.vars}
        return poly_substitute(self, full)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at scalar values for every used variable."""
        idx = [(i, values[v]) for i, v in enumerate(self.vars) if v in values]
        missing = set(self.used_vars()) - set(values)
        if missing:
            raise KeyError(f"no value for {sorted(missing)}")
        powers: dict = {}
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, val in idx:
                k = e[i]
                if k:
                    key = (i, k)
                    p = powers.get(key)
                    if p is None:
                        p = powers[key] = val ** k
                    term = term * p
            total = total + term
        return normalize(total)

    def __call__(self, **values):
        return self.evaluate(values)

    # ---------------------------------------------------------- output
    def to_str(self) -> str:
        """Canonical serialization: grlex-ordered ``coeff*var^e*...`` terms."""
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if isinstance(c, (int, Fraction)):
                cs = format_rational(c)
            else:
                cs = str(c)
            if not mono:
                out.append(cs)
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{cs}*{mono}")
        s = " + ".join(out)
        return s.replace("+ -", "- ")

    __str__ = to_str

    def __repr__(self):
        return f"SparsePoly({self.vars!r}, {self.to_str()!r})"


def gens(names: str | Iterable[str]):
    """Generators over a shared variable list: ``x, y = gens("x y")``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    return tuple(SparsePoly.var(v, names) for v in names)


def poly_substitute(f: SparsePoly, assignment: Mapping[str, object]) -> SparsePoly:
    """Replace every variable of ``f`` by a polynomial (or scalar) image.

    All images are brought onto one merged variable list.  Raises
    ``KeyError`` when a variable of ``f`` has no image.
    """
    missing = [v for v in f.used_vars() if v not in assignment]
    if missing:
        raise KeyError(f"substitution has no image for {missing}")
    images = {}
    target: tuple = ()
    for v in f.vars:
        img = assignment.get(v)
        if isinstance(img, SparsePoly):
            target = target + tuple(w for w in img.vars if w not in target)
    for v in f.vars:
        img = assignment.get(v, 0)
        if isinstance(img, SparsePoly):
            images[v] = img.with_vars(target)
        else:
            images[v] = SparsePoly.const(img, target)
    one = SparsePoly.const(1, target)
    cache = {v: [one, images[v]] for v in f.vars}

    def power(v, k):
        lst = cache[v]
        while len(lst) <= k:
            lst.append(lst[-1] * images[v])
        return lst[k]

    acc: dict = {}
    for e, c in f.terms.items():
        term = None
        for v, k in zip(f.vars, e):
            if k:
                p = power(v, k)
                term = p if term is None else term * p
        if term is None:
            term = one
        for te, tc in term.terms.items():
            val = acc.get(te, 0) + c * tc
            acc[te] = val
    return SparsePoly(target, {e: c for e, c in acc.items()})


def exact_divide(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Quotient ``q`` with ``f == q*g``; raises :class:`NotDivisible` otherwise."""
    if not g:
        raise ZeroDivisionError("exact_divide by the zero polynomial")
    f, g = f._unify(g)
    ge, gc = g.leading_term()
    gterms = list(g.terms.items())
    rem = dict(f.terms)
    quot = {}
    n = len(f.vars)
    # Work through the dividend in decreasing grlex order; exact division means
    # the leading monomial of what remains must always be divisible by lm(g).
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        diff = tuple(e[i] - ge[i] for i in range(n))
        if min(diff) < 0:
            raise NotDivisible(SparsePoly(f.vars, rem))
        qc = fdiv(c, gc)
        quot[diff] = qc
        for te, tc in gterms:
            k = tuple(diff[i] + te[i] for i in range(n))
            v = normalize(rem.get(k, 0) - qc * tc)
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return SparsePoly(f.vars, quot)


def divides(g: SparsePoly, f: SparsePoly) -> bool:
    try:
        exact_divide(f, g)
    except NotDivisible:
        return False
    return True


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, variables: Sequence[str] | None = None) -> SparsePoly:
    """Inverse of :meth:`SparsePoly.to_str` (also accepts spaces and ``**``).

    Only sums of ``coeff*var^e*...`` monomials are understood; no brackets.
    """
    s = text.replace("**", "^").strip()
    if not s:
        raise ValueError("empty polynomial")
    parsed = []
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        mono = {}
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {m.group(2)!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, exp = factor.partition("^")
            if not name.isidentifier():
                raise ValueError(f"bad variable name {name!r}")
            mono[name] = mono.get(name, 0) + (int(exp) if exp else 1)
        parsed.append((coeff, mono))
        pos = m.end()
    names = list(variables) if variables else []
    for _, mono in parsed:
        for v in mono:
            if v not in names:
                if variables:
                    raise ValueError(f"unexpected variable {v!r}")
                names.append(v)
    out = SparsePoly.const(0, tuple(names))
    for coeff, mono in parsed:
        e = tuple(mono.get(v, 0) for v in names)
        out = out + SparsePoly(tuple(names), {e: coeff})
    return out
