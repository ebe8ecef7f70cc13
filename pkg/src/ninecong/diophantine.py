"""Rational points of bounded height and p-adic points to bounded depth.

Residues are computed with numpy; anything reported as a rational point is
confirmed in exact arithmetic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .algebra import SparsePoly, poly_substitute
from .modular9.models import CubicPairModel, ProjPt

FILTER_PRIME = 1_000_003
MAX_NODES = 20_000
MAX_LOCAL_PRIME = 97


# ------------------------------------------------------------ integer forms
def integral_form(F: SparsePoly) -> SparsePoly:
    """Scalar multiple of F with coprime integer coefficients."""
    den = F.denominator_lcm()
    G = F * den if den != 1 else F
    g = 0
    for c in G.terms.values():
        g = gcd(g, int(c))
    return G / g if g > 1 else G


def _compiled(F: SparsePoly, coords, modulus: int):
    idx = [F.vars.index(v) for v in coords]
    out = []
    for e, c in F.terms.items():
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError("form must have integer coefficients")
        out.append((int(c.numerator) % modulus, tuple(e[i] for i in idx)))
    return out


def _eval_mod(compiled, pts: np.ndarray, modulus: int) -> np.ndarray:
    """Evaluate a compiled form at integer points (one per row) modulo ``modulus``."""
    pts = pts % modulus
    n = pts.shape[0]
    maxdeg = max((max(e, default=0) for _, e in compiled), default=0)
    powers = [np.ones_like(pts)]
    for _ in range(maxdeg):
        powers.append(powers[-1] * pts % modulus)
    acc = np.zeros(n, dtype=np.int64)
    for c, e in compiled:
        if not c:
            continue
        term = np.full(n, c, dtype=np.int64)
        for i, k in enumerate(e):
            if k:
                term = term * powers[k][:, i] % modulus
        acc = (acc + term) % modulus
    return acc


# ---------------------------------------------------------------- search
@dataclass
class SearchResult:
    model: CubicPairModel
    height: int
    points: list
    scanned: int

    def as_tuples(self):
        return [tuple(P) for P in self.points]


def _primitive_grid(H: int):
    """All primitive integer 4-tuples with |c| <= H and first nonzero entry positive."""
    rng = np.arange(-H, H + 1, dtype=np.int64)
    grid = np.array(np.meshgrid(rng, rng, rng, rng, indexing="ij")).reshape(4, -1).T
    nz = grid != 0
    first = np.argmax(nz, axis=1)
    lead = grid[np.arange(len(grid)), first]
    grid = grid[lead > 0]
    g = np.gcd.reduce(np.abs(grid), axis=1)
    return grid[g == 1]


def search_points(model: CubicPairModel, H: int) -> SearchResult:
    """Rational points of naive height <= H, normalised, in increasing height order."""
    if H < 1:
        raise ValueError("height bound must be at least 1")
    grid = _primitive_grid(H)
    forms = [integral_form(F) for F in model.forms]
    mask = np.ones(len(grid), dtype=bool)
    for F in forms:
        comp = _compiled(F, model.coords, FILTER_PRIME)
        mask &= _eval_mod(comp, grid, FILTER_PRIME) == 0
    found = []
    for row in grid[mask]:
        P = tuple(int(c) for c in row)
        if model.contains(P):
            found.append(P)
    found.sort(key=lambda P: (max(abs(c) for c in P), tuple(-c for c in P)))
    return SearchResult(model, H, [ProjPt(P) for P in found], len(grid))


# ------------------------------------------------------- local solubility
SOLUBLE = "Soluble"
NO_POINTS = "NoPointsToDepth"
UNDETERMINED = "Undetermined"


@dataclass
class LocalReport:
    p: int
    depth: int
    verdict: str
    witness: tuple | None = None
    smooth: bool = False
    classes_per_depth: list = field(default_factory=list)

    def describe(self) -> str:
        if self.verdict == SOLUBLE:
            return f"Q_{self.p}-point lifting {self.witness} mod {self.p}^{self.depth}"
        if self.verdict == NO_POINTS:
            return f"no Q_{self.p}-point found to depth {self.depth}"
        return f"undetermined at depth {self.depth}"


def _content_valuation(F: SparsePoly, p: int) -> int:
    v = None
    for c in F.terms.values():
        k = _valuation(int(c), p, 10**6)
        v = k if v is None else min(v, k)
    return v or 0


def _valuation(n: int, p: int, cap: int) -> int:
    if n == 0:
        return cap
    k = 0
    while n % p == 0 and k < cap:
        n //= p
        k += 1
    return k


def _mod_poly(F: SparsePoly, p: int) -> dict:
    return {e: int(c) % p for e, c in F.terms.items() if int(c) % p}


def _normalise(G1: SparsePoly, G2: SparsePoly, p: int, rounds: int = 64):
    """Strip p from the contents and reduce the pair while it is proportional mod p.

    Returns ``None`` if the pair is (p-adically) dependent within ``rounds``
    steps, in which case the branch cannot be decided.
    """
    for _ in range(rounds):
        pair = []
        for G in (G1, G2):
            if not G:
                return None
            v = _content_valuation(G, p)
            pair.append(G / p**v if v else G)
        G1, G2 = pair
        m1, m2 = _mod_poly(G1, p), _mod_poly(G2, p)
        e0 = next(iter(m2))
        c = m1.get(e0, 0) * pow(m2[e0], -1, p) % p
        if not c or set(m1) != set(m2) or any((m1[e] - c * m2[e]) % p for e in m1):
            return G1, G2
        G1 = G1 - c * G2
    return None


@dataclass
class _Node:
    G1: SparsePoly
    G2: SparsePoly
    base: tuple  # integer offsets of the original coordinates
    scale: tuple  # exponents: coordinate j = base_j + p^scale_j X_j (fixed coordinate: scale None)


AFFINE = ("X0", "X1", "X2", "X3")


def _chart_nodes(forms, coords, p: int):
    """One affine system per chart of P^3: x_i = 1, earlier coordinates in p Z_p."""
    nodes = []
    for lead in range(4):
        images, base, scale = {}, [], []
        for j, v in enumerate(coords):
            if j == lead:
                images[v] = SparsePoly.const(1, AFFINE)
                base.append(1)
                scale.append(None)
            elif j < lead:
                images[v] = p * SparsePoly.var(AFFINE[j], AFFINE)
                base.append(0)
                scale.append(1)
            else:
                images[v] = SparsePoly.var(AFFINE[j], AFFINE)
                base.append(0)
                scale.append(0)
        G1, G2 = (poly_substitute(F, images) for F in forms)
        nodes.append(_Node(G1, G2, tuple(base), tuple(scale)))
    return nodes


def _free(node: _Node):
    return [j for j, s in enumerate(node.scale) if s is not None]


def _residues(node: _Node, p: int):
    """Zeros mod p of the normalised pair, in the free affine variables."""
    free = _free(node)
    grid = np.array(list(itertools.product(range(p), repeat=len(free))), dtype=np.int64)
    pts = np.zeros((len(grid), 4), dtype=np.int64)
    pts[:, free] = grid
    mask = np.ones(len(pts), dtype=bool)
    for G in (node.G1, node.G2):
        mask &= _eval_mod(_compiled(G, AFFINE, p), pts, p) == 0
    return pts[mask]


def _smooth_mod_p(node: _Node, r, p: int) -> bool:
    free = _free(node)
    vals = dict(zip(AFFINE, (int(c) for c in r)))
    g = [[int(G.diff(AFFINE[j]).evaluate(vals)) % p for j in free] for G in (node.G1, node.G2)]
    n = len(free)
    return any(
        (g[0][i] * g[1][j] - g[0][j] * g[1][i]) % p for i in range(n) for j in range(i + 1, n)
    )


def _descend(node: _Node, r, p: int) -> _Node:
    images, base, scale = {}, list(node.base), list(node.scale)
    for j, v in enumerate(AFFINE):
        if node.scale[j] is None:
            continue
        images[v] = int(r[j]) + p * SparsePoly.var(v, AFFINE)
        base[j] = node.base[j] + p ** node.scale[j] * int(r[j])
        scale[j] = node.scale[j] + 1
    for v in AFFINE:
        images.setdefault(v, SparsePoly.var(v, AFFINE))
    G1 = poly_substitute(node.G1, images)
    G2 = poly_substitute(node.G2, images)
    return _Node(G1, G2, tuple(base), tuple(scale))


def local_solubility(model: CubicPairModel, p: int, k_max: int = 3) -> LocalReport:
    """Search for a Q_p-point, residue class by residue class.

    Each chart of P^3 gives an affine system over Z_p.  At every node the
    pair is normalised (p stripped from contents, proportional combinations
    reduced) without changing its zeros in the class, then its zeros mod p
    are listed.  A zero where the Jacobian has rank 2 mod p lifts by Hensel.
    Other zeros are refined to the next residue level.  When no class
    survives the model has no Q_p-point; the depth reached is reported.
    """
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if p > MAX_LOCAL_PRIME:
        raise ValueError(f"p = {p} exceeds the enumeration cap {MAX_LOCAL_PRIME}")
    if k_max < 1:
        raise ValueError("depth must be at least 1")
    forms = [integral_form(F) for F in model.forms]
    report = LocalReport(p, 0, UNDETERMINED)
    live = _chart_nodes(forms, model.coords, p)
    for depth in range(1, k_max + 1):
        report.depth = depth
        survivors = []
        undecided = False
        for node in live:
            pair = _normalise(node.G1, node.G2, p)
            if pair is None:
                undecided = True
                continue
            node = _Node(pair[0], pair[1], node.base, node.scale)
            for r in _residues(node, p):
                if _smooth_mod_p(node, r, p):
                    report.verdict = SOLUBLE
                    report.smooth = True
                    report.witness = _witness(node, r, p)
                    report.classes_per_depth.append(len(survivors) + 1)
                    return report
                survivors.append(_descend(node, r, p))
        report.classes_per_depth.append(len(survivors))
        if not survivors and not undecided:
            report.verdict = NO_POINTS
            return report
        if len(survivors) > MAX_NODES:
            return report
        live = survivors
    return report


def _witness(node: _Node, r, p: int) -> tuple:
    out = []
    for j in range(4):
        if node.scale[j] is None:
            out.append(node.base[j])
        else:
            out.append(node.base[j] + p ** node.scale[j] * int(r[j]))
    return tuple(out)
