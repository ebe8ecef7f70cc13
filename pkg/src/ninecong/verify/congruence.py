"""Trace-of-Frobenius comparison of two curves modulo n."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..elliptic import BadReduction, WeierstrassCurve, ap, primes_up_to


@dataclass
class CongruenceReport:
    e1: WeierstrassCurve
    e2: WeierstrassCurve
    n: int
    bound: int
    rows: list = field(default_factory=list)  # (p, a_p(E1), a_p(E2), congruent)
    skipped: list = field(default_factory=list)

    @property
    def all_congruent(self) -> bool:
        return all(r[3] for r in self.rows)

    @property
    def vacuous(self) -> bool:
        return not self.rows

    @property
    def isogeny_witness(self):
        """First tested prime with a_p(E1) != a_p(E2), if any."""
        return next((r[0] for r in self.rows if r[1] != r[2]), None)

    @property
    def failures(self):
        return [r for r in self.rows if not r[3]]

    def to_json(self) -> dict:
        return {
            "e1": [str(c) for c in self.e1.ainvs],
            "e2": [str(c) for c in self.e2.ainvs],
            "modulus": self.n,
            "bound": self.bound,
            "tested": len(self.rows),
            "skipped": self.skipped,
            "all_congruent": self.all_congruent,
            "vacuous": self.vacuous,
            "isogeny_excluded": self.isogeny_witness,
            "failures": [list(r[:3]) for r in self.failures],
        }


def verify_congruence(E1: WeierstrassCurve, E2: WeierstrassCurve, n: int = 9, B: int = 1000):
    """Compare a_p modulo n at primes p <= B good for both models and prime to n."""
    if n not in (3, 9):
        raise ValueError("modulus must be 3 or 9")
    rep = CongruenceReport(E1, E2, n, B)
    for p in primes_up_to(B):
        if n % p == 0:
            rep.skipped.append(p)
            continue
        try:
            t1, t2 = ap(E1, p), ap(E2, p)
        except BadReduction:
            rep.skipped.append(p)
            continue
        rep.rows.append((p, t1, t2, (t1 - t2) % n == 0))
    return rep
