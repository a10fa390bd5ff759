from fractions import Fraction as F
import itertools
import random

import pytest

from fuzzyriesz.errors import InputError
from fuzzyriesz.foset import (FuzzyOrderMatrix, bounds, crisp, graded, sup_inf,
                              up_down_set, validate_fuzzy_order)
from fuzzyriesz.mutation import oracle_axioms, random_fuzzy_order


def test_identity_is_a_fuzzy_order():
    m = crisp(set(), 3)
    r = validate_fuzzy_order(m)
    assert r.ok and r.violations == []


def test_antisymmetry_witness():
    m = FuzzyOrderMatrix.from_rows([[1, F(3, 5)], [F(3, 5), 1]], labels=["a", "b"])
    r = validate_fuzzy_order(m)
    assert not r.antisymmetric
    assert ("antisymmetric", (0, 1)) in r.violations


def test_transitivity_witness():
    rows = [[1, F(4, 5), F(7, 10)], [0, 1, F(9, 10)], [0, 0, 1]]
    r = validate_fuzzy_order(FuzzyOrderMatrix.from_rows(rows))
    assert r.reflexive and r.antisymmetric and not r.transitive
    assert r.violations == [("transitive", (0, 1, 2))]


def test_reflexivity_witness_is_first_bad_diagonal():
    m = crisp(set(), 3).replace(2, 2, F(1, 2)).replace(1, 1, 0)
    assert validate_fuzzy_order(m).violations[0] == ("reflexive", (1,))


def test_bad_entries_rejected():
    with pytest.raises(InputError):
        FuzzyOrderMatrix.from_rows([[1, F(3, 2)], [0, 1]])
    with pytest.raises(InputError):
        FuzzyOrderMatrix.from_rows([[1, 0.5], [0, 1]])
    with pytest.raises(InputError):
        FuzzyOrderMatrix(65, [[1] * 65] * 65)


def test_up_down_sets():
    chain = graded({(0, 1)}, 2)
    assert up_down_set(chain, 0, "up").membership == (1, F(2, 3))
    assert up_down_set(crisp(set(), 2), 0, "down").membership == (1, 0)
    m = random_fuzzy_order(random.Random(3), 5)
    for x in range(5):
        assert up_down_set(m, x, "down")[x] == 1
    with pytest.raises(InputError):
        up_down_set(m, 7, "up")


def test_bounds_examples():
    chain = graded({(0, 1), (1, 2), (0, 2)}, 3)
    U, L = bounds(chain, {0, 1})
    assert U.membership == (0, F(2, 3), F(2, 3))
    assert L[0] == F(2, 3)
    U, _ = bounds(crisp(set(), 2), {0, 1})
    assert U.membership == (0, 0)
    U, _ = bounds(chain, {2})
    assert U[2] == 1
    with pytest.raises(InputError):
        bounds(chain, set())


def test_sup_examples():
    diamond = graded({(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)}, 4, labels=["bot", "a", "b", "top"])
    assert sup_inf(diamond, {1, 2}) == 3
    assert sup_inf(diamond, {1, 2}, "inf") == 0
    assert sup_inf(diamond, {1}) == 1
    assert sup_inf(crisp(set(), 2), {0, 1}) is None


def _poset_sup(rel, size, A, mode):
    le = lambda a, b: a == b or (a, b) in rel  # noqa: E731
    if mode == "inf":
        le = lambda a, b, _le=le: _le(b, a)  # noqa: E731
    ub = [z for z in range(size) if all(le(a, z) for a in A)]
    least = [z for z in ub if all(le(z, y) for y in ub)]
    return least[0] if least else None


def _random_poset(rng, size):
    perm = list(range(size))
    rng.shuffle(perm)
    rel = {(perm[i], perm[j]) for i in range(size) for j in range(i + 1, size) if rng.random() < 0.4}
    changed = True
    while changed:
        new = {(a, d) for (a, b) in rel for (c, d) in rel if b == c} - rel
        changed = bool(new)
        rel |= new
    return rel


def test_crisp_sup_matches_poset_oracle():
    rng = random.Random(11)
    for _ in range(200):
        size = rng.randint(1, 6)
        rel = _random_poset(rng, size)
        m = crisp(rel, size)
        assert validate_fuzzy_order(m).ok
        for r in range(1, size + 1):
            for A in itertools.combinations(range(size), r):
                for mode in ("sup", "inf"):
                    assert sup_inf(m, A, mode) == _poset_sup(rel, size, A, mode)


def test_sup_is_unique_and_bounds_monotone():
    rng = random.Random(5)
    for _ in range(200):
        m = random_fuzzy_order(rng, rng.randint(2, 6))
        A = set(rng.sample(range(m.size), rng.randint(1, m.size)))
        U, _ = bounds(m, A)
        cands = sorted(U.members())
        sups = [z for z in cands if all(m(z, y) > F(1, 2) for y in cands)]
        assert len(sups) <= 1
        assert sup_inf(m, A) == (sups[0] if sups else None)
        sub = set(rng.sample(sorted(A), rng.randint(1, len(A))))
        Us, _ = bounds(m, sub)
        assert U.members() <= Us.members()


def test_validator_matches_triple_loop_oracle_random():
    rng = random.Random(2)
    grid = [F(0), F(1, 3), F(3, 5), F(2, 3), F(1)]
    for _ in range(300):
        n = rng.randint(1, 6)
        rows = [[rng.choice(grid) for _ in range(n)] for _ in range(n)]
        if rng.random() < 0.5:
            rows = [list(r) for r in random_fuzzy_order(rng, n).grades]
        r = validate_fuzzy_order(FuzzyOrderMatrix(n, rows))
        assert (r.reflexive, r.antisymmetric, r.transitive) == oracle_axioms(rows)
