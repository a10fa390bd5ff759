"""Majorizing extension from a diagonal sublattice, then a dominated factorization."""

from fuzzyriesz.extension import (SublatticeSubspace, SubspaceOperator, extend_lattice_hom,
                                  factorize, theta_extension)
from fuzzyriesz.operators import RationalOperator
from fuzzyriesz.rational import fmt
from fuzzyriesz.space import GradedSpace, Vec

sp = GradedSpace(2)
M = SublatticeSubspace.build(sp, [(1, 1)])
T = SubspaceOperator(M, (Vec((2,)),), GradedSpace(1))
for x in [(1, 3), (2, 2), (-4, 1)]:
    print(f"theta{x} = {theta_extension(M, T, x)}")


def show(A):
    return [[fmt(a) for a in row] for row in A.entries]


print("linear hom extension:", show(extend_lattice_hom(M, T)))

R = RationalOperator.from_rows
Q, S, Tf = R([[1, 0], [0, 0]]), R([[1, 1]]), R([[1, 0]])
S1 = factorize(Q, S, Tf)
print("S1 =", show(S1), " S1 Q =", show(S1.compose(Q)))
