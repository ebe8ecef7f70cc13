"""The two elliptic surfaces: a section of infinite order, and the match with the raw curves."""
from ninecong.surfaces import first_good_fibre, j_evidence, section_multiples, surface

for sign in ("direct", "reverse"):
    S = surface(sign)
    print(f"{sign} surface: [a1, a2, a3, a4, a6] = {[str(c) for c in S.curve.ainvs]}")
    T0 = first_good_fibre(S)
    rep = section_multiples(S, 12, T0)
    print(f"  fibre T = {T0}: nP != O for n <= 12: {rep.certificate}")
    ev = j_evidence(sign)
    print(f"  reparametrisation read as {ev.direction!r}")
    for raw, printed, j_raw, j_pr, ok in ev.rows:
        print(f"    raw T = {raw}, surface T = {printed}: j = {j_raw}  equal: {ok}")
