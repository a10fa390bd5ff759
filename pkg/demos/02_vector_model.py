"""The graded order on Q^n, lattice operations and a Riesz homomorphism."""

from fuzzyriesz.operators import RationalOperator, classify_operator, kernel_ideal
from fuzzyriesz.space import GradedSpace, Vec, order_grade

sp = GradedSpace(3)
x, y = Vec((1, -2, 3)), Vec((0, 4, 3))
print("mu(x, y) =", order_grade(sp, x, y), " mu(x&y, y) =", order_grade(sp, x & y, y))
print("x+ =", x.pos, " x- =", x.neg, " |x| =", abs(x))

for rows in ([[2, 0, 0], [0, 0, 5]], [[1, 1, 0]]):
    T = RationalOperator.from_rows(rows)
    c = classify_operator(T)
    print(rows, "hom" if c.riesz_hom else "not a hom", c.witnesses or "")
    if c.riesz_hom:
        print("  kernel ideal:", kernel_ideal(T).labels())
