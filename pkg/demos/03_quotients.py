"""Quotient by a coordinate ideal: three-valued order and the Archimedean battery."""

from fuzzyriesz.ideals import CoordinateIdeal
from fuzzyriesz.quotient import QuotientSpace, archimedean_battery, nu_table, project
from fuzzyriesz.space import GradedSpace

sp = GradedSpace(3)
q = QuotientSpace(sp, CoordinateIdeal(sp, {2}))
classes = [project(q, v) for v in [(0, 0, 9), (1, 1, -4), (1, 0, 0), (0, 1, 0)]]
print("classes:", classes)
for row in nu_table(q, classes).grades:
    print("  ", [str(g) for g in row])

res = archimedean_battery(q, trials=50)
print(res.report.text())
