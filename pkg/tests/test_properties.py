"""Hypothesis properties across the modules."""

from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from fuzzyriesz.extension import SublatticeSubspace, SubspaceOperator, factorize, theta_extension
from fuzzyriesz.foset import FuzzyOrderMatrix, validate_fuzzy_order
from fuzzyriesz.ideals import CoordinateIdeal, band_projection, disjoint_complement, stabilization_index
from fuzzyriesz.mutation import oracle_axioms
from fuzzyriesz.operators import RationalOperator, semantic_hom, structural_hom
from fuzzyriesz.quotient import QuotientSpace, grade_by_correction, project, quotient_grade
from fuzzyriesz.seqmodel import SeqTerm, nonneg_everywhere
from fuzzyriesz.space import GradedSpace, Vec, order_grade

rats = st.fractions(min_value=-50, max_value=50, max_denominator=12)
grades = st.sampled_from([F(0), F(1, 3), F(3, 5), F(2, 3), F(1)])


def vecs(n):
    return st.lists(rats, min_size=n, max_size=n).map(Vec)


@st.composite
def vec_pair(draw, max_dim=6):
    n = draw(st.integers(1, max_dim))
    return draw(vecs(n)), draw(vecs(n))


@st.composite
def tables(draw):
    n = draw(st.integers(1, 4))
    return [[draw(grades) for _ in range(n)] for _ in range(n)]


@st.composite
def matrices(draw):
    m, n = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    vals = st.one_of(st.just(F(0)), st.just(F(0)), rats)
    return RationalOperator.from_rows([[draw(vals) for _ in range(n)] for _ in range(m)])


@given(tables())
def test_validator_matches_oracle(rows):
    r = validate_fuzzy_order(FuzzyOrderMatrix(len(rows), rows))
    assert (r.reflexive, r.antisymmetric, r.transitive) == oracle_axioms(rows)


@given(vec_pair())
def test_lattice_identities(p):
    x, y = p
    assert x == x.pos - x.neg
    assert abs(x) == x.pos + x.neg
    assert x.pos & x.neg == Vec.zeros(len(x))
    assert x + y == (x | y) + (x & y)


@given(vec_pair(), rats)
def test_order_is_translation_invariant(p, t):
    x, y = p
    sp = GradedSpace(len(x))
    shift = Vec([t] * len(x))
    assert order_grade(sp, x + shift, y + shift) == order_grade(sp, x, y)


@given(matrices())
def test_hom_oracles_agree(T):
    assert structural_hom(T)[0] == semantic_hom(T, samples=5)[0]


@given(vec_pair(5), st.sets(st.integers(0, 4)))
def test_quotient_grade_matches_correction(p, coords):
    x, y = p
    sp = GradedSpace(len(x))
    q = QuotientSpace(sp, CoordinateIdeal(sp, {c for c in coords if c < len(x)}))
    assert quotient_grade(q, project(q, x), project(q, y)) == grade_by_correction(q, x, y)
    assert project(q, x) | project(q, y) == project(q, x | y)


@given(vec_pair(5), st.sets(st.integers(0, 4)))
def test_band_split(p, coords):
    x, _ = p
    sp = GradedSpace(len(x))
    B = CoordinateIdeal(sp, {c for c in coords if c < len(x)})
    a, b = band_projection(B, x)
    assert a + b == x and a in B and b in disjoint_complement(B)


@given(vec_pair(5))
def test_stabilization(p):
    x, y = abs(p[0]), abs(p[1])
    sp = GradedSpace(len(x))
    m = stabilization_index(sp, x, y, verify=False)
    top = x & (y * m)
    assert all(x & (y * k) == top for k in range(m, m + 5))


@given(rats, rats, rats)
def test_nonneg_everywhere_vs_scan(c0, c1, c2):
    d = SeqTerm(c0, c1, c2)
    scan = all(d(n) >= 0 for n in range(1, 500))
    if nonneg_everywhere(d):
        assert scan
    elif scan:
        # any violation must lie beyond the scanned range
        assert c0 <= 0


@given(st.integers(1, 4), st.lists(rats, min_size=4, max_size=4))
def test_theta_on_diagonal(n, x):
    sp = GradedSpace(n)
    M = SublatticeSubspace.build(sp, [[1] * n])
    T = SubspaceOperator(M, (Vec((2,)),), GradedSpace(1))
    x = Vec(x[:n])
    assert theta_extension(M, T, x) == Vec((2 * max(x),))


@settings(max_examples=50)
@given(st.integers(1, 3), st.data())
def test_factorize_identity_q(n, data):
    S = RationalOperator.from_rows([[data.draw(st.integers(0, 5)) for _ in range(n)]])
    T = RationalOperator.from_rows([[F(data.draw(st.integers(0, 10)), 10) * s for s in S.entries[0]]])
    Q = RationalOperator.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])
    assert factorize(Q, S, T).entries == T.entries
