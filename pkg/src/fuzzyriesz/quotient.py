"""Quotients ``E/A`` of a graded space by a coordinate ideal.

Classes are stored by their canonical representative, the member that is
zero on the ideal's coordinates. The quotient order is three-valued:
1 on equal classes, 2/3 when some representatives compare, 0 otherwise.
The middle grade is fixed at 2/3 whatever the ambient ``alpha``.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .convergence import GeomSequence, converges_uniformly_to
from .errors import InputError
from .foset import sup_inf, validate_fuzzy_order, FuzzyOrderMatrix
from .ideals import (CoordinateIdeal, band_projection, random_increasing_sequences,
                     stabilization_index)
from .operators import RationalOperator, classify_operator, kernel_ideal
from .rational import HALF, ONE, ZERO
from .report import Report
from .space import GradedSpace, Vec, archimedean_witness, check_archimedean, leq, random_vec

QUOTIENT_GRADE = Fraction(2, 3)


@dataclass(frozen=True)
class QuotientSpace:
    ambient: GradedSpace
    ideal: CoordinateIdeal

    def __post_init__(self):
        if self.ideal.ambient != self.ambient:
            raise InputError("ideal belongs to a different space")

    @property
    def reduced_dim(self):
        return self.ambient.dim - len(self.ideal.coords)

    @property
    def free_coords(self):
        return sorted(self.ideal.complement_coords)

    def cls(self, f):
        return project(self, f)

    def zero(self):
        return QClass(self, self.ambient.zero())

    def reduced_space(self):
        return GradedSpace(self.reduced_dim, QUOTIENT_GRADE)

    def to_reduced(self, F):
        return Vec(F.representative[i] for i in self.free_coords)

    def from_reduced(self, v):
        out = [ZERO] * self.ambient.dim
        for i, a in zip(self.free_coords, v):
            out[i] = a
        return QClass(self, Vec(out))

    def projection_operator(self):
        """The canonical projection as a matrix onto the reduced coordinates."""
        n = self.ambient.dim
        rows = [[1 if j == i else 0 for j in range(n)] for i in self.free_coords]
        return RationalOperator(rows, self.ambient, self.reduced_space())


@dataclass(frozen=True)
class QClass:
    space: QuotientSpace
    representative: Vec

    def __post_init__(self):
        rep = Vec(self.representative)
        if any(rep[i] != 0 for i in self.space.ideal.coords):
            raise InputError("representative must vanish on the ideal's coordinates")
        object.__setattr__(self, "representative", rep)

    def _same(self, other):
        if not isinstance(other, QClass) or other.space != self.space:
            raise InputError("class belongs to a different quotient space")

    def __add__(self, other):
        self._same(other)
        return QClass(self.space, self.representative + other.representative)

    def __sub__(self, other):
        self._same(other)
        return QClass(self.space, self.representative - other.representative)

    def __mul__(self, s):
        return QClass(self.space, self.representative * s)

    __rmul__ = __mul__

    def __or__(self, other):
        self._same(other)
        return QClass(self.space, self.representative | other.representative)

    def __and__(self, other):
        self._same(other)
        return QClass(self.space, self.representative & other.representative)

    @property
    def pos(self):
        return QClass(self.space, self.representative.pos)

    def __repr__(self):
        return f"[{', '.join(str(a) for a in self.representative)}]"


def project(q: QuotientSpace, f) -> QClass:
    """The class of ``f``: zero out the ideal's coordinates."""
    f = Vec(f)
    q.ambient.check(f)
    return QClass(q, f.restrict(q.ideal.complement_coords))


def quotient_grade(q: QuotientSpace, F: QClass, G: QClass) -> Fraction:
    for X in (F, G):
        if X.space != q:
            raise InputError("class belongs to a different quotient space")
    if F == G:
        return ONE
    if F.representative <= G.representative:
        return QUOTIENT_GRADE
    return ZERO


def grade_by_correction(q: QuotientSpace, f, g) -> Fraction:
    """The quotient grade from arbitrary representatives ``f``, ``g``.

    Classes are equal when ``f - g`` lies in the ideal. Otherwise they
    compare when some ``a`` in the ideal satisfies ``a <= g - f``; the
    candidate ``a = (g - f)`` restricted to the ideal is built and tested.
    """
    f, g = Vec(f), Vec(g)
    d = g - f
    if d in q.ideal:
        return ONE
    a = d.restrict(q.ideal.coords)
    if leq(q.ambient, a, d):
        return QUOTIENT_GRADE
    return ZERO


def nu_table(q: QuotientSpace, classes) -> FuzzyOrderMatrix:
    rows = [[quotient_grade(q, F, G) for G in classes] for F in classes]
    return FuzzyOrderMatrix(len(classes), rows)


def _distinct(classes):
    out = []
    for c in classes:
        if c not in out:
            out.append(c)
    return out


def _random_in_ideal(q, rng):
    return random_vec(rng, q.ambient.dim).restrict(q.ideal.coords)


def check_quotient_lattice(q: QuotientSpace, samples: int = 1000, seed: int = 0) -> Report:
    """``E/A`` is a fuzzy Riesz space with ``[f] | [g] == [f | g]``.

    Per trial: the grade computed from canonical representatives matches
    the correction criterion on random representatives; the grade table on
    a small set of classes is a valid fuzzy order in which ``[f | g]`` and
    ``[f & g]`` are the supremum and infimum of ``{[f], [g]}``; translation
    and scaling compatibility; ``[f] + [g] == [f] | [g] + [f] & [g]``.
    """
    rng = random.Random(seed)
    rep = Report("3.5", "quotient-lattice",
                 details={"dim": q.ambient.dim, "ideal": q.ideal.labels()})
    n = q.ambient.dim
    for k in range(samples):
        rep.trials += 1
        f = random_vec(rng, n)
        g = f + random_vec(rng, n, nonneg=True, sparsity=0.4) if k % 3 == 0 else random_vec(rng, n)
        h = random_vec(rng, n)
        F, G, H = project(q, f), project(q, g), project(q, h)

        # two routes to the grade
        f1, g1 = f + _random_in_ideal(q, rng), g + _random_in_ideal(q, rng)
        if quotient_grade(q, F, G) != grade_by_correction(q, f1, g1):
            rep.fail(check="nu-oracle", f=f1, g=g1)

        # projection commutes with the lattice operations
        J, M = project(q, f1 | g1), project(q, f1 & g1)
        if J != F | G or M != F & G:
            rep.fail(check="join-descends", f=f1, g=g1)
        if F + G != J + M:
            rep.fail(check="riesz-identity", f=f, g=g)

        p = random_vec(rng, n, nonneg=True, sparsity=0.3)
        cands = _distinct([F, G, J, M, H, J + project(q, p), M - project(q, p), F | H, G & H])
        table = nu_table(q, cands)
        ax = validate_fuzzy_order(table)
        if not ax.ok:
            rep.fail(check="fuzzy-order", violations=ax.violations)
        iF, iG = cands.index(F), cands.index(G)
        if sup_inf(table, [iF, iG], "sup") != cands.index(J):
            rep.fail(check="sup", f=f, g=g)
        if sup_inf(table, [iF, iG], "inf") != cands.index(M):
            rep.fail(check="inf", f=f, g=g)

        nu = quotient_grade(q, F, G)
        if nu > HALF:
            lam = Fraction(rng.randint(1, 50), rng.randint(1, 7))
            if quotient_grade(q, F + H, G + H) < nu or quotient_grade(q, F * lam, G * lam) < nu:
                rep.fail(check="compatibility", f=f, g=g, h=h, lam=lam)
            if quotient_grade(q, G, F) > HALF and F != G:
                rep.fail(check="antisymmetry", f=f, g=g)
    return rep


def check_projection_hom(q: QuotientSpace, samples: int = 100, seed: int = 0) -> Report:
    """The canonical projection is a Riesz homomorphism with kernel ``A``."""
    rng = random.Random(seed)
    P = q.projection_operator()
    rep = Report("3.6-3.7", "projection-hom", details={"ideal": q.ideal.labels()})
    cls = classify_operator(P, samples=50, seed=seed)
    if not cls.riesz_hom:
        rep.fail(check="riesz-hom", witness=cls.witnesses)
    else:
        K = kernel_ideal(P)
        if K.coords != q.ideal.coords:
            rep.fail(check="kernel", kernel=K.labels())
    for _ in range(samples):
        rep.trials += 1
        x = random_vec(rng, q.ambient.dim)
        if P(x).pos != P(x.pos):
            rep.fail(check="positive-part", x=x)
        if q.to_reduced(project(q, x)) != P(x):
            rep.fail(check="matrix-vs-class", x=x)
    return rep


@dataclass
class BatteryResult:
    archimedean: bool
    uniformly_closed: bool
    cond3: bool
    cond4: bool
    report: Report = None

    @property
    def agree(self):
        return len({self.archimedean, self.uniformly_closed, self.cond3, self.cond4}) == 1


def archimedean_battery(q: QuotientSpace, trials: int = 100, seed: int = 0) -> BatteryResult:
    """Evaluate the four equivalent conditions for ``E/A`` to be Archimedean.

    1. ``E/A`` Archimedean (explicit escaping scalars);
    2. ``A`` uniformly closed (geometric sequences with terms in ``A``);
    3. increasing sequences in ``A+`` keep their relatively uniform limit in ``A``;
    4. ``(n x - w)^+ in A`` for all ``n`` forces ``x in A`` (``x, w >= 0``),
       the "for all n" decided through the stabilization index.
    """
    rng = random.Random(seed)
    A = q.ideal
    n = q.ambient.dim
    rep = Report("3.8", "archimedean-battery", trials=trials,
                 details={"ideal": A.labels()})

    c1 = check_archimedean(q.reduced_space(), samples=trials, seed=seed)
    for _ in range(trials):
        x = random_vec(rng, n, nonneg=True)
        X = project(q, x)
        if X == q.zero():
            continue
        B = project(q, random_vec(rng, n))
        lam = archimedean_witness(X.representative, B.representative)
        if quotient_grade(q, X * lam, B) > HALF:
            c1 = False
            rep.fail(cond=1, x=x, bound=B.representative)

    c2 = True
    for _ in range(trials):
        a, b = random_vec(rng, n), random_vec(rng, n, sparsity=0.3)
        if rng.random() < 0.8:
            a, b = a.restrict(A.coords), b.restrict(A.coords)
        seq = GeomSequence(a, b, rng.choice([Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)]))
        if not all(seq.term(k) in A for k in (1, 2)):
            continue
        if converges_uniformly_to(seq, seq.limit, abs(b), Fraction(1, 8)) is None:
            continue
        if seq.limit not in A:
            c2 = False
            rep.fail(cond=2, base=a, drift=b)

    c3 = True
    for seq in random_increasing_sequences(rng, A, trials):
        terms_ok = all(seq.term(k) in A and seq.term(k).is_nonneg() for k in (1, 2))
        if terms_ok and converges_uniformly_to(seq, seq.limit, abs(seq.drift), Fraction(1, 8)) is not None:
            if seq.limit not in A:
                c3 = False
                rep.fail(cond=3, base=seq.base)

    c4 = True
    for k in range(trials):
        x = random_vec(rng, n, nonneg=True, sparsity=0.3)
        if k % 2 == 0:
            x = x.restrict(A.coords)
        w = random_vec(rng, n, nonneg=True)
        m = stabilization_index(q.ambient, w, x)
        # supports of (n x - w)^+ grow with n and are maximal from n = m + 1 on
        premise = all(((x * j) - w).pos in A for j in range(1, m + 2))
        if premise and x not in A:
            c4 = False
            rep.fail(cond=4, x=x, w=w)

    res = BatteryResult(c1, c2, c3, c4, rep)
    rep.details.update(archimedean=c1, uniformly_closed=c2, cond3=c3, cond4=c4)
    if not res.agree:
        rep.fail(cond="agreement")
    return res


def representatives_agree(q, f, g):
    """``[f] == [g]`` iff ``f - g`` lies in the ideal."""
    return (project(q, f) == project(q, g)) == (Vec(f) - Vec(g) in q.ideal)


def band_split_class(q, f):
    """Canonical representative via the band projection onto the complement."""
    from .ideals import disjoint_complement
    return band_projection(disjoint_complement(q.ideal), f)[0]
