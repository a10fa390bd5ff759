"""Sequences modulo the ideal generated by (1/n^2) do not form an Archimedean quotient."""

from fuzzyriesz.seqmodel import Y, correction, in_principal_ideal, nonarchimedean_demo, truncation_witness

a3 = correction(3)
print("a_3 patch:", {n: str(v) for n, v in a3.patch.items()}, " lambda =", in_principal_ideal(a3).lam)
print("y in ideal?", in_principal_ideal(Y).member)
demo = nonarchimedean_demo(12)
for r in demo.rows:
    print(f"  k={r.k:>2}  nu([y], [e]/k) = {r.grade}  lambda = {r.lam}")
print(demo.verdict)
t = truncation_witness(50)
print("truncation y_50 in ideal:", t.in_ideal, " |y - y_50| <= e/50:", t.within)
