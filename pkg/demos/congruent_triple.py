"""Walk through the 47775z1 example: model, points, curves, traces of Frobenius."""
from ninecong.algebra import matvec
from ninecong.diophantine import integral_form, search_points
from ninecong.elliptic import reduced_short_model
from ninecong.modular9 import nine_congruent_curve, twisted_model
from ninecong.verify import get_case, verify_congruence

case = get_case("ex-47775-direct")
print("E: y^2 = x^3 + (%s) x + (%s)" % (case.a, case.b))

model = twisted_model(case.a, case.b, "direct").transform(case.matrix)
print("X_E(9) after the coordinate change (one basis of the pencil of cubics):")
for name, F in zip(("F1", "F2"), model.forms):
    print(f"  {name} =", integral_form(F))

points = search_points(model, 5).as_tuples()
print("points of height <= 5:", points)

curves = []
for P in points:
    P0 = matvec(case.matrix, list(P))
    F = nine_congruent_curve(case.a, case.b, P0, "direct")
    R = reduced_short_model(F)
    curves.append(F)
    print(f"  {P} -> y^2 = x^3 + ({R.a4}) x + ({R.a6}),  j = {F.j}")

for i in range(len(curves)):
    for k in range(i + 1, len(curves)):
        rep = verify_congruence(curves[i], curves[k], 9, 1000)
        print(f"curves {i},{k}: a_p agree mod 9 at {len(rep.rows)} primes: {rep.all_congruent};"
              f" first p with a_p different: {rep.isogeny_witness}")
