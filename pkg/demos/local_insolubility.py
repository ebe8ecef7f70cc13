"""Why there is no reverse partner for 47775z1: the reverse model has no 7-adic point."""
from ninecong.diophantine import local_solubility
from ninecong.modular9 import twisted_model
from ninecong.verify import get_case

case = get_case("ex-47775-direct")
reverse = twisted_model(case.a, case.b, "reverse")

for p in (2, 5, 7, 11):
    rep = local_solubility(reverse, p, 4)
    print(f"p = {p:2d}: {rep.verdict:16s} {rep.describe()}  classes per level {rep.classes_per_depth}")
