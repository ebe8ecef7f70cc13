"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from ninecong.diophantine import NO_POINTS, local_solubility  # noqa: E402
from ninecong.modular9 import (  # noqa: E402
    forget_invariant,
    hessian_pencil_factorization,
    hessian_pencil_universal,
    kernel_generators,
    preserves_ideal,
    rho_S,
    rho_T,
    scaling_identities,
    tangent_hessian_identity,
    torsion_bridge,
    twisted_model,
)
from ninecong.surfaces import (  # noqa: E402
    TORSION_BOUND,
    first_good_fibre,
    j_evidence,
    section_multiples,
    substitution_identities,
    surface,
)
from ninecong.verify import get_case, reproduce  # noqa: E402

SIGNS = ("direct", "reverse")


def _line(n, ok, detail):
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"


def _announce(capsys, line):
    if capsys is None:
        print(line)
        return
    with capsys.disabled():
        print("\n" + line)


# ---------------------------------------------------------------- checks
def criterion_1():
    t0 = time.perf_counter()
    checks = {}
    det, expected = hessian_pencil_universal()
    checks["hessian pencil of X(9)"] = det == expected
    checks["scaling identities"] = len(scaling_identities()) == 4 and all(scaling_identities().values())
    for s in SIGNS:
        try:
            f, D, dH = hessian_pencil_factorization(s)
            checks[f"factorisation {s}"] = f * D == dH
        except ArithmeticError:
            checks[f"factorisation {s}"] = False
        checks[f"bridge {s}"] = torsion_bridge(s).passed
        checks[f"substitution {s}"] = all(substitution_identities(s).values())
    checks["tangent/Hessian identity"] = tangent_hessian_identity().passed
    checks["rho(S) ideal"] = preserves_ideal(rho_S())
    checks["rho(T) ideal"] = preserves_ideal(rho_T())
    for name, g in kernel_generators().items():
        checks[f"{name} ideal"] = preserves_ideal(g)
        checks[f"{name} forget"] = forget_invariant(g)
    elapsed = time.perf_counter() - t0
    failed = [k for k, v in checks.items() if not v]
    ok = not failed and elapsed < 300
    return ok, f"{len(checks) - len(failed)}/{len(checks)} identities, {elapsed:.1f}s" + (
        f", failed: {failed}" if failed else ""
    )


def _witnesses(report):
    pairs = report.stage("congruence").detail["pairs"]
    return [(p["pair"], p["isogeny_excluded_by"], p["isomorphic"]) for p in pairs]


def criterion_2():
    t0 = time.perf_counter()
    rep = reproduce("ex-47775-direct")
    elapsed = time.perf_counter() - t0
    ok = rep.passed and elapsed < 120
    found = rep.stage("search").detail["found"] if rep.stage("search").ok else []
    wit = [w for _, w, iso in _witnesses(rep) if not iso] if rep.passed else []
    return ok, f"{len(found)} points at height 5, isogeny excluded at p = {wit}, {elapsed:.1f}s"


def criterion_3():
    rep = reproduce("ex-201-reverse")
    ok = rep.passed and [1, -2, -1, 0] in rep.stage("search").detail["found"]
    wit = [w for _, w, iso in _witnesses(rep) if not iso] if rep.passed else []
    return ok, f"point (1:-2:-1:0) at height 3, isogeny excluded at p = {wit}"


def criterion_4():
    case = get_case("ex-47775-direct")
    model = twisted_model(case.a, case.b, "reverse")
    for k in (3, 4, 5, 6):
        rep = local_solubility(model, 7, k)
        if rep.verdict == NO_POINTS:
            return rep.depth <= 6, f"{rep.describe()} (k_max {k}, classes {rep.classes_per_depth})"
        if rep.verdict != "Undetermined":
            return False, rep.describe()
    return False, "undetermined at depth 6"


def criterion_5():
    details, ok = [], True
    for ident, T0 in (("ex-qt-direct", 0), ("ex-qt-reverse", "-1/4")):
        rep = reproduce(ident)
        case = get_case(ident)
        ok &= rep.passed and str(case.specialize_at) == str(T0)
        if rep.passed:
            pair = rep.stage("specialisation").detail["pairs"][0]
            w = pair["isogeny_excluded_by"]
            ok &= w is not None and w <= 100
            details.append(f"{ident} T={T0} witness p={w}")
        else:
            details.append(f"{ident} failed")
    return ok, "; ".join(details)


def criterion_6():
    details, ok = [], True
    for ident in ("triple-4650", "triple-27606"):
        rep = reproduce(ident)
        ok &= rep.passed
        wit = [w for _, w, _ in _witnesses(rep)] if rep.passed else "failed"
        details.append(f"{ident} witnesses {wit}")
    return ok, "; ".join(details)


def criterion_7():
    ok, details = True, []
    for s in SIGNS:
        S = surface(s)
        on = S.curve.contains(S.section())
        T0 = first_good_fibre(S)
        cert = section_multiples(S, TORSION_BOUND, T0).certificate
        ev = j_evidence(s)
        ok &= on and cert and ev.passed
        details.append(f"{s}: section {on}, certificate at T={T0} {cert}, j equal at {len(ev.rows)} fibres")
    return ok, "; ".join(details)


def criterion_8():
    import test_properties as props

    ran = []
    for name in (
        "test_hasse_bound",
        "test_hasse_bound_on_example_curves",
        "test_associativity_over_fp",
        "test_forget9_choice_invariance",
        "test_search_monotone_in_height",
    ):
        try:
            getattr(props, name)()
            ran.append(name)
        except Exception as exc:  # report which suite broke
            return False, f"{name}: {type(exc).__name__}: {exc}"
    return True, f"{len(ran)} property suites"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("n", range(1, 9))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    _announce(capsys, _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        _announce(None, _line(n, ok, detail))
        results.append(ok)
    sys.exit(0 if all(results) else 1)
