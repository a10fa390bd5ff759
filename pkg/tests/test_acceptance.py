"""The ten acceptance criteria at their stated sizes.

Each test prints one ``criterion N: PASS|FAIL`` line straight to the terminal.
"""

from fractions import Fraction

import pytest

from fuzzyriesz import suite
from fuzzyriesz.seqmodel import nonarchimedean_demo


@pytest.fixture
def say(capsys):
    def emit(n, ok, what):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {what}")
    return emit


def test_c1_foset_oracle(say):
    rep = suite.foset_oracle_report(random_trials=1000, grid_sample=5000)
    d = rep.details
    say(1, rep.passed, f"{rep.trials} fosets ({d['exhaustive']} exhaustive, {d['grid4']} size-4 grid, "
                       f"{d['random']} random), {len(rep.failures)} disagreements")
    assert rep.passed and d["random"] == 1000


def test_c2_lattice_calculus(say):
    rep = suite.lattice_identities_report(samples=10_000, max_dim=8)
    say(2, rep.passed, f"{rep.trials} vectors, {len(rep.failures)} identity failures")
    assert rep.passed and rep.trials == 10_000


def test_c3_hom_witnesses(say):
    rep = suite.hom_witness_report(samples=1000)
    say(3, rep.passed, f"{rep.trials} (T, x, y) triples, {len(rep.failures)} witness failures")
    assert rep.passed


def test_c4_image_theorems(say):
    rep = suite.image_theorems_report(instances=1000)
    say(4, rep.passed, f"{rep.trials} (hom, ideal) instances, strict example reproduced: "
                       f"{rep.details['strict_example']}")
    assert rep.passed and rep.details["strict_example"]


def test_c5_quotient(say):
    rep = suite.quotient_report(quotients=100, pairs_each=10)
    say(5, rep.passed, f"{rep.trials} pairs, projection homs with kernel A: {rep.details['projection_homs']}")
    assert rep.passed and rep.trials >= 1000 and rep.details["projection_homs"] == "100/100"


def test_c6_archimedean_both_sides(say):
    bat = suite.battery_report(max_dim=4, trials=20)
    demo = nonarchimedean_demo(1000)
    ok = bat.passed and demo.ok and len(demo.rows) == 1000
    say(6, ok, f"{bat.trials} coordinate ideals all-true; demo k=1..{len(demo.rows)} certified, "
               f"[y] != [0]: {demo.y_nonzero}")
    assert ok
    assert all(r.grade == Fraction(2, 3) and r.dominated for r in demo.rows)


def test_c7_stabilization_and_projection(say):
    st = suite.stabilization_report(samples=1000)
    pp = suite.principal_projection_report(trials=1000)
    ok = st.passed and pp.passed
    say(7, ok, f"stabilization {st.trials} pairs ({len(st.failures)} mismatches), "
               f"principal projection {pp.trials} trials ({len(pp.failures)} mismatches)")
    assert ok and pp.trials >= 1000


def test_c8_extension_factorization(say):
    th = suite.theta_report(points=100)
    fa = suite.factorize_report(instances=100)
    ok = th.passed and fa.passed
    say(8, ok, f"theta {th.trials} points + pairs ({len(th.failures)} failures), "
               f"factorize {fa.trials} instances ({len(fa.failures)} failures)")
    assert ok


def test_c9_mutation(say):
    reps = suite.mutation_reports(trials=500)
    ok = all(r.passed and r.details["detected"] == 500 for r in reps)
    say(9, ok, ", ".join(f"{r.name[7:]} {r.details['detected']}/{r.trials}" for r in reps))
    assert ok


def test_c10_determinism(say):
    def structured(seed):
        return "\n".join(r.record() for r in suite.run_suite(seed, Fraction(1, 10))).encode()

    a, b = structured(42), structured(42)
    ok = a == b and b"status=fail" not in a
    say(10, ok, f"two seeded suite runs, {len(a)} bytes each, identical: {a == b}")
    assert ok
