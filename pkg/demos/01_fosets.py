"""Fuzzy orders on a four-point diamond and the sup computation."""

from fractions import Fraction

from fuzzyriesz.foset import graded, sup_inf, validate_fuzzy_order

# bottom < a, b < top, graded 2/3 when comparable
rel = {(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}
m = graded(rel, 4, Fraction(2, 3), labels=["bot", "a", "b", "top"])
print("axioms:", validate_fuzzy_order(m))
print("sup{a, b} =", m.label(sup_inf(m, ["a", "b"], "sup")))
print("inf{a, b} =", m.label(sup_inf(m, ["a", "b"], "inf")))

broken = m.replace(3, 0, Fraction(2, 3))
print("after grading top <= bot at 2/3:", validate_fuzzy_order(broken).violations[:2])
