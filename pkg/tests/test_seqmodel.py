from fractions import Fraction as F
import random

import pytest

from fuzzyriesz.errors import InputError
from fuzzyriesz.seqmodel import (E, GENERATOR, Y, SeqTerm, correction, eventual_grade, identical,
                                 in_principal_ideal, nonarchimedean_demo, nonneg_everywhere,
                                 truncation_witness)


def test_grade_examples():
    assert eventual_grade(Y, Y) == 1
    assert eventual_grade(Y, E) == F(2, 3)
    assert eventual_grade(E, Y) == 0
    # patched values count
    assert eventual_grade(Y, SeqTerm(1, patch={3: F(1, 4)})) == 0


def test_constant_embedding():
    for a in range(-3, 4):
        for b in range(-3, 4):
            want = 1 if a == b else (F(2, 3) if a <= b else 0)
            assert eventual_grade(SeqTerm(a), SeqTerm(b)) == want


def test_membership_examples():
    m = in_principal_ideal(SeqTerm(0, 0, 5))
    assert m.member and m.lam == 5
    m = in_principal_ideal(SeqTerm(patch={1: F(1, 2), 3: F(-1)}))
    assert m.member and m.lam == 9
    assert not in_principal_ideal(Y).member
    assert not in_principal_ideal(E).member
    with pytest.raises(InputError):
        in_principal_ideal(GENERATOR, Y)


def test_correction_k3():
    a = correction(3)
    assert a.patch == {1: F(2, 3), 2: F(1, 6)}
    assert in_principal_ideal(a).lam == F(2, 3)
    assert correction(1).patch == {}


def test_nonneg_against_scan():
    rng = random.Random(0)
    for _ in range(400):
        c = [F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(3)]
        patch = {rng.randint(1, 30): F(rng.randint(-5, 5)) for _ in range(rng.randint(0, 3))}
        d = SeqTerm(*c, patch=patch)
        scan = all(d(n) >= 0 for n in range(1, 3000))
        if c[0] != 0:
            # past the roots the sign of c0 wins
            assert nonneg_everywhere(d) == (scan and c[0] > 0)
        else:
            assert nonneg_everywhere(d) == scan


def test_identical_ignores_redundant_patch():
    assert identical(Y, SeqTerm(0, 1, patch={2: F(1, 2)}))
    assert not identical(Y, SeqTerm(0, 1, patch={2: F(1, 3)}))


def test_demo_small():
    demo = nonarchimedean_demo(25)
    assert demo.ok and demo.y_nonzero
    assert [r.k for r in demo.rows] == list(range(1, 26))
    assert all(r.grade == F(2, 3) for r in demo.rows)
    assert demo.rows[2].lam == F(2, 3)
    with pytest.raises(InputError):
        nonarchimedean_demo(0)


def test_truncation():
    t = truncation_witness(10)
    assert t.in_ideal and t.within
    assert t.term(10) == F(1, 10) and t.term(11) == 0


def test_json_round_trip():
    f = SeqTerm(F(1, 2), -3, 0, {4: F(7, 9)})
    assert SeqTerm.from_json(f.to_json()) == f
