from fractions import Fraction as F
import random

import pytest

from fuzzyriesz.errors import InputError
from fuzzyriesz.ideals import (CoordinateIdeal, SubspaceSpec, band_projection, check_sigma_ideal,
                               disjoint_complement, ideal_generated_by, is_band, is_solid,
                               principal_lambda, random_increasing_sequences, stabilization_index,
                               sup_of_multiples, verify_principal_projection)
from fuzzyriesz.linalg import Subspace
from fuzzyriesz.space import GradedSpace, Vec, random_vec

SP3 = GradedSpace(3)


def test_solidity_examples():
    assert is_solid(SubspaceSpec(SP3, [SP3.unit(0)])).solid
    assert is_solid(SubspaceSpec(SP3, [])).solid
    res = is_solid(SubspaceSpec(GradedSpace(2), [(1, 1)]))
    assert not res.solid
    x, y = res.witness
    assert y == Vec((1, 1)) and x == Vec((1, 0))


def test_solidity_witness_is_valid():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 4)
        basis = [random_vec(rng, n, num=3, den=1, sparsity=0.5) for _ in range(rng.randint(0, 3))]
        res = is_solid(SubspaceSpec(GradedSpace(n), basis))
        sub = Subspace(basis, n)
        supp = {i for b in basis for i in b.support()}
        assert res.solid == (sub == Subspace.coordinate(supp, n))
        if not res.solid:
            x, y = res.witness
            assert y in sub and abs(x) <= abs(y) and x not in sub


def test_generated_ideal_examples():
    assert ideal_generated_by(SP3, [(0, 0, 0)]).coords == frozenset()
    assert ideal_generated_by(SP3, [(1, 0, 2)]).labels() == [1, 3]
    assert ideal_generated_by(SP3, [SP3.unit(0), SP3.unit(1)]).labels() == [1, 2]


def test_generated_ideal_is_minimal_and_principal():
    rng = random.Random(3)
    for _ in range(100):
        D = [random_vec(rng, 4, sparsity=0.6) for _ in range(rng.randint(1, 3))]
        A = ideal_generated_by(GradedSpace(4), D)
        assert is_solid(A.spec()).solid and all(d in A for d in D)
        for c in A.coords:
            smaller = CoordinateIdeal(A.ambient, A.coords - {c})
            assert not all(d in smaller for d in D)
        x = D[0]
        Ix = ideal_generated_by(GradedSpace(4), [x])
        y = random_vec(rng, 4)
        assert (principal_lambda(x, y) is not None) == (y in Ix)


def test_complement_and_bands():
    B = CoordinateIdeal(SP3, {0})
    assert disjoint_complement(B).labels() == [2, 3]
    rng = random.Random(0)
    for _ in range(50):
        B = CoordinateIdeal(SP3, {i for i in range(3) if rng.random() < 0.5})
        assert disjoint_complement(disjoint_complement(B)) == B and is_band(B)
        x, y = B.random_element(rng), disjoint_complement(B).random_element(rng)
        assert abs(x) & abs(y) == SP3.zero()


def test_band_projection():
    B = CoordinateIdeal(GradedSpace(2), {0})
    assert band_projection(B, (3, -4)) == (Vec((3, 0)), Vec((0, -4)))
    assert band_projection(B, (3, 0)) == (Vec((3, 0)), Vec((0, 0)))
    rng = random.Random(1)
    for _ in range(1000):
        x = random_vec(rng, 3)
        B = CoordinateIdeal(SP3, {i for i in range(3) if rng.random() < 0.5})
        x1, x2 = band_projection(B, x)
        assert x1 + x2 == x and abs(x1) & abs(x2) == SP3.zero()
        assert band_projection(B, x1)[0] == x1
        if x.is_nonneg():
            assert x1.is_nonneg()


def test_stabilization_examples():
    sp = GradedSpace(2)
    assert stabilization_index(sp, (3, 5), (1, 0)) == 3
    assert stabilization_index(sp, (3, 5), (0, 0)) == 1
    assert stabilization_index(sp, (0, 0), (2, 1)) == 1
    assert stabilization_index(sp, (F(7, 2), 1), (1, F(1, 3))) == 4
    with pytest.raises(InputError):
        stabilization_index(sp, (-1, 0), (1, 1))


def _scan(x, y, top=80):
    x, y = Vec(x), Vec(y)
    for m in range(1, top):
        if all((x & (y * n)) == (x & (y * m)) for n in range(m, top)):
            return m


def test_stabilization_brute_force():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 4)
        x = random_vec(rng, n, num=20, den=3, nonneg=True)
        y = random_vec(rng, n, num=20, den=3, nonneg=True, sparsity=0.3)
        assert stabilization_index(GradedSpace(n), x, y) == _scan(x, y)


def test_principal_projection():
    sp = GradedSpace(2)
    assert sup_of_multiples(sp, (3, 7), (1, 0)) == Vec((3, 0))
    assert verify_principal_projection(sp, (1, 0), 100).passed
    rep = verify_principal_projection(sp, (0, 0), 20)
    assert rep.passed and rep.details["ideal"] == []


def test_sigma_ideal_spot_check():
    rng = random.Random(4)
    B = CoordinateIdeal(GradedSpace(4), {0, 2})
    assert check_sigma_ideal(B, random_increasing_sequences(rng, B, 100)) == []
    outside = random_increasing_sequences(rng, B, 100, inside=False)
    # sequences leaving B are ignored, never reported
    assert check_sigma_ideal(B, outside) == []
