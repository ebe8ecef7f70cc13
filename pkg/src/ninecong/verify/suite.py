"""Every identity and example in one run, as a JSON-ready summary."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..diophantine import NO_POINTS, local_solubility
from ..families3 import SIGNS
from ..modular9 import (
    hessian_pencil_factorization,
    hessian_pencil_universal,
    scaling_identities,
    sl2_action_check,
    tangent_hessian_identity,
    torsion_bridge,
    twisted_model,
)
from ..surfaces import (
    first_good_fibre,
    j_evidence,
    section_multiples,
    substitution_identities,
    surface,
)
from .cases import CASES
from .reproduce import reproduce

SCHEMA = 1
GROUPS = ("modular9", "surfaces", "diophantine", "examples")
LOCAL_DEPTHS = (3, 4, 5, 6)


@dataclass
class Item:
    ident: str
    group: str
    status: str  # "pass", "fail" or "skipped"
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0


def _hessian_universal():
    got, want = hessian_pencil_universal()
    return got == want, {}


def _scaling():
    res = scaling_identities()
    return all(res.values()), {k: v for k, v in res.items()}


def _factorization(sign):
    def run():
        _, D, _ = hessian_pencil_factorization(sign)
        return True, {"quartic_terms": len(D.terms)}
    return run


def _bridge(sign):
    def run():
        rep = torsion_bridge(sign)
        return rep.passed, {
            "determinant_matches": rep.determinant_ok,
            "in_span": [s is not None for s in rep.span],
            "change_of_basis_invertible": bool(rep.change_of_basis_det),
        }
    return run


def _tangent():
    res = tangent_hessian_identity()
    bad = [k for k, v in res.entries_ok.items() if not v]
    return res.passed, {"entries": len(res.entries_ok), "failed_entries": bad}


def _action():
    rep = sl2_action_check()
    return rep.passed, {"checks": len(rep.checks), "failed": rep.failures()}


def _substitution(sign):
    def run():
        res = substitution_identities(sign)
        return all(res.values()), dict(res)
    return run


def _multiples(sign):
    def run():
        S = surface(sign)
        T0 = first_good_fibre(S, 2)
        rep = section_multiples(S, 12, T0)
        return rep.certificate, {"T": T0, "zero_multiples": rep.zero_at}
    return run


def _j(sign):
    def run():
        ev = j_evidence(sign)
        return ev.passed, {
            "kind": "evidence",
            "direction": ev.direction,
            "parameters": [[str(r[0]), str(r[1]), r[4]] for r in ev.rows],
        }
    return run


def _local():
    case = CASES["ex-47775-direct"]
    model = twisted_model(case.a, case.b, "reverse")
    for k in LOCAL_DEPTHS:
        rep = local_solubility(model, 7, k)
        if rep.verdict != "Undetermined":
            break
    return rep.verdict == NO_POINTS, {
        "verdict": rep.verdict,
        "depth": rep.depth,
        "report": rep.describe(),
        "classes_per_depth": rep.classes_per_depth,
    }


def _example(ident):
    def run():
        rep = reproduce(ident)
        failed = [s.name for s in rep.stages if not s.ok]
        return rep.passed, {"failed_stages": failed}
    return run


def _plan():
    plan = [
        ("hessian-pencil-X9", "modular9", _hessian_universal),
        ("scaling-identities", "modular9", _scaling),
    ]
    plan += [(f"hessian-factorization-{s}", "modular9", _factorization(s)) for s in SIGNS]
    plan += [(f"torsion-bridge-{s}", "modular9", _bridge(s)) for s in SIGNS]
    plan += [
        ("tangent-hessian-identity", "modular9", _tangent),
        ("sl2-action", "modular9", _action),
    ]
    plan += [(f"substitution-{s}", "surfaces", _substitution(s)) for s in SIGNS]
    plan += [(f"section-multiples-{s}", "surfaces", _multiples(s)) for s in SIGNS]
    plan += [(f"j-evidence-{s}", "surfaces", _j(s)) for s in SIGNS]
    plan.append(("local-insolubility-47775z1-reverse-p7", "diophantine", _local))
    plan += [(f"example-{k}", "examples", _example(k)) for k in CASES]
    return plan


def verify_all(skip=()) -> dict:
    """Run every item not in a skipped group; failures are carried, not raised."""
    unknown = set(skip) - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown groups {sorted(unknown)}; choose from {GROUPS}")
    items = []
    for ident, group, fn in _plan():
        if group in skip:
            items.append(Item(ident, group, "skipped"))
            continue
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        items.append(Item(ident, group, "pass" if ok else "fail", detail, time.perf_counter() - t))
    counts = {s: sum(1 for i in items if i.status == s) for s in ("pass", "fail", "skipped")}
    return {
        "schema": SCHEMA,
        "ok": counts["fail"] == 0,
        "counts": counts,
        "items": [
            {"id": i.ident, "group": i.group, "status": i.status, "detail": i.detail,
             "seconds": round(i.seconds, 3)}
            for i in items
        ],
    }
