import json

import pytest

from ninecong.cli import main, parse_curve, parse_numbers
from ninecong.elliptic import WeierstrassCurve, is_isomorphic
from ninecong.verify import get_case


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def case_args(ident):
    case = get_case(ident)
    curve = f"short:[{case.a},{case.b}]"
    matrix = ",".join(str(c) for row in case.matrix for c in row)
    return case, curve, matrix


def test_parse_curve_forms():
    assert parse_curve("[0,0,1,-1,0]").ainvs == (0, 0, 1, -1, 0)
    assert parse_curve("short:[-1, 1/2]").ainvs[3:] == (-1, 0.5)


@pytest.mark.parametrize("bad", ["0,0,1,-1,0", "[1,2]", "short:[1,2,3]", "[a,b,c,d,e]"])
def test_parse_curve_rejects(bad):
    import argparse

    with pytest.raises(argparse.ArgumentTypeError):
        parse_curve(bad)


def test_parse_numbers_count():
    import argparse

    assert parse_numbers("1, 2/3") == [1, parse_numbers("2/3")[0]]
    with pytest.raises(argparse.ArgumentTypeError):
        parse_numbers("1,2", 3)


def test_model_command(capsys):
    code, out, _ = run(capsys, "model", "--curve", "short:[-1,1]", "--sign", "direct")
    assert code == 0
    assert out["sign"] == "direct" and out["a"] == "-1"


def test_search_command(capsys):
    _, curve, matrix = case_args("ex-201-reverse")
    code, out, _ = run(capsys, "search", "--curve", curve, "--sign", "reverse",
                       f"--matrix={matrix}", "--height", "3")
    assert code == 0
    assert ["1", "-2", "-1", "0"] in out["points"]


def test_forget_command(capsys):
    case, curve, matrix = case_args("ex-201-reverse")
    code, out, _ = run(capsys, "forget", "--curve", curve, "--sign", "reverse",
                       f"--matrix={matrix}", "--point", "1,-2,-1,0")
    assert code == 0
    E = WeierstrassCurve(*(int(c) for c in out["curve"]["ainvs"]))
    assert is_isomorphic(E, case.expected[0][1]) is not None


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--e1", "[0,-1,1,-10,-20]", "--e2", "[0,0,1,-1,0]",
                       "--bound", "100")
    assert code == 0
    assert out["all_congruent"] is False


def test_local_command(capsys):
    code, out, _ = run(capsys, "local", "--curve", "short:[-1,1]", "--sign", "direct", "-p", "5")
    assert code == 0
    assert out["verdict"] in ("Soluble", "NoPointsToDepth", "Undetermined")
    assert out["report"]


def test_surface_command(capsys):
    code, out, _ = run(capsys, "surface", "--sign", "direct", "--multiples", "12")
    assert code == 0
    assert out["fibre"]["T"] == "2"
    assert out["multiples"]["infinite_order_certificate"] is True


def test_bad_surface_fibre_is_an_error(capsys):
    code, out, err = run(capsys, "surface", "--sign", "direct", "--specialize", "0")
    assert code == 2 and out is None
    assert "BadSpecialization" in json.loads(err)["error"]


def test_singular_curve_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["model", "--curve", "short:[0,0]", "--sign", "direct"])
    assert info.value.code == 2
    assert "discriminant" in capsys.readouterr().err


def test_verify_all_with_skips(capsys, tmp_path):
    target = tmp_path / "summary.json"
    code, out, _ = run(capsys, "verify-all", "--skip", "diophantine", "--skip", "examples",
                       "--json", str(target))
    assert code == 0
    assert out["ok"] and out["counts"]["skipped"] > 0
    assert json.loads(target.read_text()) == out


def test_missing_command_exits():
    with pytest.raises(SystemExit):
        main([])
