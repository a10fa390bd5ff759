from fractions import Fraction as F
import random

import pytest

from fuzzyriesz.foset import validate_fuzzy_order
from fuzzyriesz.ideals import SubspaceSpec, is_solid
from fuzzyriesz.mutation import (TARGETS, ideal_oracle, maxmin_closure, mutate, oracle_axioms,
                                 random_fuzzy_order, random_ideal_basis)
from fuzzyriesz.operators import RationalOperator, semantic_hom, structural_hom
from fuzzyriesz.space import GradedSpace, Vec


def test_generators_are_valid():
    rng = random.Random(0)
    for _ in range(200):
        m = random_fuzzy_order(rng, rng.randint(1, 6))
        assert all(oracle_axioms(m.grades)) and validate_fuzzy_order(m).ok
        n = rng.randint(2, 5)
        assert ideal_oracle(random_ideal_basis(rng, n), n)


def test_maxmin_closure_is_transitive():
    rows = [[1, F(2, 3), 0], [0, 1, F(1, 3)], [0, 0, 1]]
    c = maxmin_closure(rows)
    assert c[0][2] == F(1, 3)
    assert oracle_axioms(c)[2]


def test_named_mutants():
    m = random_fuzzy_order(random.Random(1), 3).replace(0, 0, F(1, 2))
    assert not validate_fuzzy_order(m).reflexive
    T = RationalOperator.from_rows([[1, 0], [0, 2]]).replace(0, 1, 3)
    assert not structural_hom(T)[0] and not semantic_hom(T)[0]
    res = is_solid(SubspaceSpec(GradedSpace(3), [Vec((1, 1, 0))]))
    assert not res.solid and res.witness is not None


@pytest.mark.parametrize("target", TARGETS)
def test_mutate_detects_everything(target):
    res = mutate(target, 150, seed=3)
    assert res.ok, res.summary()
    assert res.summary().startswith("150/150 mutants detected")


def test_unknown_target():
    with pytest.raises(ValueError):
        mutate("band", 1)
