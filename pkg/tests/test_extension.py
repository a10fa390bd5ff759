from fractions import Fraction as F
import random

import pytest

from fuzzyriesz.errors import InfeasibleError, PreconditionError
from fuzzyriesz.extension import (SublatticeSubspace, SubspaceOperator, atom_decomposition,
                                  extend_lattice_hom, factorize, is_lattice_hom_on, null_ideal,
                                  order_continuity_check, random_factorization, random_sublattice,
                                  theta_extension, verify_theta)
from fuzzyriesz.ideals import disjoint_complement
from fuzzyriesz.operators import RationalOperator, structural_hom
from fuzzyriesz.space import GradedSpace, Vec, random_vec

R = RationalOperator.from_rows


def diagonal():
    sp = GradedSpace(2)
    M = SublatticeSubspace.build(sp, [(1, 1)])
    return M, SubspaceOperator(M, (Vec((2,)),), GradedSpace(1))


def test_null_ideal_examples():
    assert null_ideal(R([[1, 0], [0, 0]])).labels() == [2]
    assert null_ideal(RationalOperator.zero(2, 2)).labels() == [1, 2]
    assert null_ideal(R([[1, 2], [3, 4]])).labels() == []
    with pytest.raises(PreconditionError):
        null_ideal(R([[1, -1]]))


def test_null_ideal_is_band():
    rng = random.Random(0)
    for _ in range(200):
        S = R([[rng.choice([0, 0, 1, F(1, 2)]) for _ in range(4)] for _ in range(3)])
        N = null_ideal(S)
        assert disjoint_complement(disjoint_complement(N)) == N


def test_order_continuity():
    rep = order_continuity_check(R([[2, 0], [0, 3]]), trials=50)
    assert rep.passed and rep.trials == 50
    assert order_continuity_check(RationalOperator.zero(2, 2), trials=10).passed
    assert order_continuity_check(R([[1, 1]]), trials=10).passed


def test_sublattice_build():
    sp = GradedSpace(3)
    M = SublatticeSubspace.build(sp, [(1, 2, 0), (0, 0, 3)])
    assert M.dim == 2 and M.is_majorizing()
    with pytest.raises(PreconditionError):
        SublatticeSubspace.build(sp, [(1, -1, 0)])
    assert len(atom_decomposition([Vec((1, 1, 0)), Vec((2, 2, 0))], 3)) == 1


def test_theta_examples():
    M, T = diagonal()
    assert theta_extension(M, T, (1, 3)) == Vec((6,))
    assert theta_extension(M, T, (2, 2)) == Vec((4,))
    assert theta_extension(M, T, (-5, 1)) == Vec((2,))
    assert M.least_majorant((1, 3)) == Vec((3, 3))


def test_theta_not_majorizing():
    sp = GradedSpace(2)
    M = SublatticeSubspace.build(sp, [(1, 0)])
    T = SubspaceOperator(M, (Vec((1,)),), GradedSpace(1))
    with pytest.raises(InfeasibleError):
        theta_extension(M, T, (0, 1))


def test_theta_random():
    rng = random.Random(0)
    for k in range(30):
        M, T = random_sublattice(rng, rng.randint(1, 4), rng.randint(1, 3))
        assert is_lattice_hom_on(T)
        assert verify_theta(M, T, samples=5, seed=k).passed
        z = M.random_element(rng)
        assert theta_extension(M, T, z) == T(z)
        S = extend_lattice_hom(M, T)
        assert structural_hom(S)[0]
        x = random_vec(rng, M.ambient.dim)
        assert theta_extension(M, T, x) == S(M.least_majorant(x))


def test_factorize_examples():
    assert factorize(R([[1, 0], [0, 1]]), R([[2, 2]]), R([[1, 1]])).entries == ((1, 1),)
    assert factorize(R([[1, 0], [0, 0]]), R([[1, 1]]), R([[1, 0]])).entries == ((1, 0),)
    S1 = factorize(R([[1, 0], [0, 1]]), R([[2, 2]]), R([[0, 0]]))
    assert S1.entries == ((0, 0),)


def test_factorize_preconditions():
    with pytest.raises(PreconditionError, match="T <= S o Q"):
        factorize(R([[1, 0], [0, 1]]), R([[1, 1]]), R([[2, 0]]))
    with pytest.raises(PreconditionError):
        factorize(R([[1, 1]]), R([[1]]), R([[1, 0]]))
    with pytest.raises(PreconditionError):
        factorize(R([[1, 0], [0, 1]]), R([[1, -1]]), R([[0, 0]]))


def test_factorize_random_and_mutated():
    rng = random.Random(5)
    for _ in range(50):
        Q, S, T = random_factorization(rng)
        S1 = factorize(Q, S, T)
        assert S1.compose(Q).entries == T.entries
        assert all(0 <= a <= b for r, s in zip(S1.entries, S.entries) for a, b in zip(r, s))
        SQ = S.compose(Q)
        i, j = rng.randrange(T.rows), rng.randrange(T.cols)
        bad = T.replace(i, j, SQ.entries[i][j] + 1)
        with pytest.raises(PreconditionError):
            factorize(Q, S, bad)
