"""Command line interface: ``ninecong <command> ...``; every command prints JSON."""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra import as_fraction, format_rational, matvec
from .diophantine import local_solubility, search_points
from .elliptic import SingularCurve, WeierstrassCurve, reduced_short_model
from .families3 import check_sign, hesse_family
from .modular9 import c4_c6_from_short, forget9, short_coefficients, twisted_model
from .surfaces import first_good_fibre, section_multiples, surface
from .verify import GROUPS, verify_all, verify_congruence


def parse_curve(text: str) -> WeierstrassCurve:
    """``[a1,a2,a3,a4,a6]`` or ``short:[a,b]``; entries are integers or p/q."""
    text = text.strip()
    short = text.startswith("short:")
    body = text[len("short:"):] if short else text
    m = re.fullmatch(r"\[(.*)\]", body.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"curve must look like [a1,a2,a3,a4,a6] or short:[a,b], got {text!r}")
    try:
        vals = [as_fraction(v.strip()) for v in m.group(1).split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if len(vals) != (2 if short else 5):
        raise argparse.ArgumentTypeError(f"wrong number of coefficients in {text!r}")
    try:
        return WeierstrassCurve.short(*vals) if short else WeierstrassCurve(*vals)
    except SingularCurve as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def parse_numbers(text: str, count: int | None = None):
    try:
        vals = [as_fraction(v.strip()) for v in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if count is not None and len(vals) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {len(vals)}")
    return vals


def _fmt(c):
    return format_rational(c) if isinstance(c, (int, Fraction)) else str(c)


def _curve_out(E: WeierstrassCurve) -> dict:
    return {
        "ainvs": [_fmt(c) for c in reduced_short_model(E).ainvs],
        "j": _fmt(E.j),
    }


def _short_ab(E: WeierstrassCurve):
    """(a, b) as given for short input, else the y^2 = x^3 - 27 c4 x - 54 c6 model."""
    return (E.a4, E.a6) if E.is_short() and not E.a2 else short_coefficients(E)


def _model_for(args):
    a, b = _short_ab(args.curve)
    model = twisted_model(a, b, args.sign)
    if getattr(args, "matrix", None):
        M = parse_numbers(args.matrix, 16)
        model = model.transform([M[4 * i: 4 * i + 4] for i in range(4)])
    return model, (a, b)


def cmd_model(args):
    model, (a, b) = _model_for(args)
    return {"a": _fmt(a), "b": _fmt(b), "sign": check_sign(args.sign), **model.serialize()}


def cmd_forget(args):
    a, b = _short_ab(args.curve)
    P = parse_numbers(args.point, 4)
    if args.matrix:
        M = parse_numbers(args.matrix, 16)
        P = matvec([M[4 * i: 4 * i + 4] for i in range(4)], P)
    rs = forget9(a, b, P, args.sign).normalized()
    c4, c6 = c4_c6_from_short(a, b)
    E2 = hesse_family(c4, c6, rs, args.sign)
    return {"point": [_fmt(c) for c in P], "rs": [_fmt(rs.r), _fmt(rs.s)], "curve": _curve_out(E2)}


def cmd_verify(args):
    return verify_congruence(args.e1, args.e2, args.mod, args.bound).to_json()


def cmd_search(args):
    model, _ = _model_for(args)
    res = search_points(model, args.height)
    return {"model": model.tag, "height": res.height, "scanned": res.scanned, "points": [[_fmt(c) for c in P] for P in res.points]}


def cmd_local(args):
    model, _ = _model_for(args)
    rep = local_solubility(model, args.p, args.depth)
    return {
        "p": rep.p,
        "depth": rep.depth,
        "verdict": rep.verdict,
        "witness": list(rep.witness) if rep.witness else None,
        "classes_per_depth": rep.classes_per_depth,
        "report": rep.describe(),
    }


def cmd_surface(args):
    S = surface(args.sign)
    out = {"sign": S.sign, "ainvs": [str(c) for c in S.curve.ainvs], "discriminant": str(S.discriminant)}
    if args.specialize is not None or args.multiples:
        T0 = args.specialize if args.specialize is not None else first_good_fibre(S)
        E = S.specialize(T0)
        out["fibre"] = {"T": _fmt(T0), "ainvs": [_fmt(c) for c in E.ainvs], "j": _fmt(E.j)}
        if args.multiples:
            rep = section_multiples(S, args.multiples, T0)
            out["multiples"] = {
                "n_max": args.multiples,
                "zero_at": rep.zero_at,
                "infinite_order_certificate": rep.certificate,
            }
    return out


def cmd_verify_all(args):
    summary = verify_all(skip=tuple(args.skip or ()))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary, fh, indent=2)
    return summary


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ninecong", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def with_model(p, matrix=True):
        p.add_argument("--curve", type=parse_curve, required=True, help="[a1,a2,a3,a4,a6] or short:[a,b]")
        p.add_argument("--sign", choices=("direct", "reverse"), required=True)
        if matrix:
            p.add_argument("--matrix", help="16 comma-separated entries, row by row (old = M new); write --matrix=... if it starts with -")

    p = sub.add_parser("model", help="the two cubics defining X_E(9) or X_E^-(9)")
    with_model(p, matrix=True)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("forget", help="(r:s) and the 9-congruent curve attached to a point")
    with_model(p)
    p.add_argument("--point", required=True, help="x,y,z,t")
    p.set_defaults(func=cmd_forget)

    p = sub.add_parser("verify", help="compare traces of Frobenius modulo 3 or 9")
    p.add_argument("--e1", type=parse_curve, required=True)
    p.add_argument("--e2", type=parse_curve, required=True)
    p.add_argument("--mod", type=int, choices=(3, 9), default=9)
    p.add_argument("--bound", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="rational points of bounded height")
    with_model(p)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("local", help="search for p-adic points")
    with_model(p)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("surface", help="the elliptic surfaces over Q(T)")
    p.add_argument("--sign", choices=("direct", "reverse"), required=True)
    p.add_argument("--specialize", type=as_fraction, default=None)
    p.add_argument("--multiples", type=int, default=0)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("verify-all", help="run every identity and worked example")
    p.add_argument("--skip", action="append", choices=GROUPS)
    p.add_argument("--json", help="also write the summary to this file")
    p.set_defaults(func=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return 2
    print(json.dumps(out, indent=2, default=str))
    if args.command == "verify-all":
        return 0 if out["ok"] else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
