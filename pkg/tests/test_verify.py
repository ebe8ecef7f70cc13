import json
import random

import pytest

from ninecong.elliptic import WeierstrassCurve, is_isomorphic
from ninecong.verify import (
    CASES,
    LABEL_ONLY,
    UnknownEquations,
    get_case,
    reproduce,
    verify_all,
    verify_congruence,
)

E_11A = WeierstrassCurve(0, -1, 1, -10, -20)
E_37A = WeierstrassCurve(0, 0, 1, -1, 0)


# ----------------------------------------------------------- congruence
def test_congruence_symmetric():
    E1, E2 = (c for _, c in get_case("ex-47775-direct").expected[:2])
    r12 = verify_congruence(E1, E2, 9, 300)
    r21 = verify_congruence(E2, E1, 9, 300)
    assert r12.all_congruent and r21.all_congruent
    assert [r[0] for r in r12.rows] == [r[0] for r in r21.rows]
    assert r12.isogeny_witness == r21.isogeny_witness


def test_isomorphic_models_agree_everywhere():
    E2 = E_11A.change_coordinates(2, 1, -1, 3)
    assert is_isomorphic(E_11A, E2) is not None
    rep = verify_congruence(E_11A, E2, 9, 200)
    assert rep.all_congruent and rep.isogeny_witness is None


def test_unrelated_curves_fail():
    rep = verify_congruence(E_11A, E_37A, 9, 200)
    assert not rep.all_congruent
    assert rep.failures


def test_random_curve_not_congruent_to_example():
    rng = random.Random(9)
    E = get_case("ex-201-reverse").expected[0][1]
    for _ in range(3):
        F = WeierstrassCurve.short(rng.randint(-50, 50), rng.randint(1, 50))
        assert not verify_congruence(E, F, 9, 300).all_congruent


def test_modulus_three_weaker_than_nine():
    E1, E2 = (c for _, c in get_case("triple-4650").expected[:2])
    assert verify_congruence(E1, E2, 3, 200).all_congruent


def test_primes_dividing_modulus_skipped():
    rep = verify_congruence(E_11A, E_37A, 9, 50)
    assert 3 in rep.skipped and 11 in rep.skipped and 37 in rep.skipped
    assert all(r[0] not in (3, 11, 37) for r in rep.rows)


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        verify_congruence(E_11A, E_37A, 5, 50)


def test_report_json_round_trips():
    rep = verify_congruence(E_11A, E_37A, 9, 30)
    assert json.loads(json.dumps(rep.to_json()))["modulus"] == 9


# ------------------------------------------------------------ examples
@pytest.mark.parametrize("ident", sorted(CASES))
def test_case_reproduces(ident):
    rep = reproduce(ident)
    assert rep.passed, rep.to_json()


def test_printed_points_found_at_height():
    rep = reproduce("ex-47775-direct")
    found = rep.stage("search").detail["found"]
    assert [1, 2, -1, 0] in found


def test_label_only_triple_has_no_equations():
    assert "triple-1701" in LABEL_ONLY
    with pytest.raises(UnknownEquations):
        get_case("triple-1701")


def test_unknown_case():
    with pytest.raises(KeyError):
        get_case("no-such-case")


def test_stage_after_failure_is_marked(monkeypatch):
    import importlib

    mod = importlib.import_module("ninecong.verify.reproduce")

    def boom(*a, **k):
        raise ArithmeticError("forced")

    monkeypatch.setattr(mod, "search_points", boom)
    rep = reproduce("ex-201-reverse")
    assert not rep.passed
    assert rep.stage("model").ok
    assert not rep.stage("search").ok
    assert "after failed stage" in rep.stage("congruence").detail["error"]


# ------------------------------------------------------------- suite
def _stable(summary):
    return [(i["id"], i["status"], json.dumps(i["detail"], sort_keys=True, default=str))
            for i in summary["items"]]


def test_verify_all_deterministic():
    s1 = verify_all(skip=("diophantine", "examples"))
    s2 = verify_all(skip=("diophantine", "examples"))
    assert _stable(s1) == _stable(s2)
    assert s1["ok"]


def test_skip_reported():
    s = verify_all(skip=("modular9", "surfaces", "diophantine", "examples"))
    assert s["counts"]["pass"] == 0
    assert all(i["status"] == "skipped" for i in s["items"])
    assert s["counts"]["skipped"] == len(s["items"])


def test_unknown_group_rejected():
    with pytest.raises(ValueError):
        verify_all(skip=("nonsense",))
