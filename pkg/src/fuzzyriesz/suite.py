"""Batteries shared by the CLI and the acceptance tests.

Each function takes explicit sizes and a seed and returns a :class:`Report`;
``run_suite`` strings them together at a common scale.
"""

import itertools
import random
from fractions import Fraction

from .extension import factorize, random_factorization, random_sublattice, theta_extension
from .foset import FuzzyOrderMatrix, validate_fuzzy_order
from .ideals import CoordinateIdeal, stabilization_index, verify_principal_projection
from .mutation import TARGETS, mutate, oracle_axioms, random_fuzzy_order
from .operators import (RationalOperator, hom_witness_w, hom_witness_z, random_hom,
                        verify_image_theorems)
from .quotient import QuotientSpace, archimedean_battery, check_projection_hom, check_quotient_lattice
from .report import Report
from .seqmodel import nonarchimedean_demo, truncation_witness
from .space import GradedSpace, Vec, random_vec

GRID = tuple(Fraction(g) for g in ("0", "1/3", "3/5", "2/3", "1"))


def _axioms(m):
    r = validate_fuzzy_order(m)
    return r.reflexive, r.antisymmetric, r.transitive


def foset_grid(size, diagonal_one=False):
    """Every ``size x size`` table over the grade grid (optionally with a unit diagonal)."""
    cells = [(i, j) for i in range(size) for j in range(size) if not (diagonal_one and i == j)]
    for vals in itertools.product(GRID, repeat=len(cells)):
        rows = [[Fraction(1) if i == j else None for j in range(size)] for i in range(size)]
        for (i, j), v in zip(cells, vals):
            rows[i][j] = v
        yield FuzzyOrderMatrix(size, rows)


def foset_oracle_report(random_trials=1000, grid_sample=5000, seed=0) -> Report:
    """The vectorised validator against a plain triple loop.

    Exhaustive on sizes 1-2 and on size 3 with a unit diagonal; a seeded
    sample of the size-4 grid; then random instances of size up to 8.
    """
    rng = random.Random(seed)
    rep = Report("1.1", "foset-oracle")
    counts = {"exhaustive": 0, "grid4": 0, "random": 0}

    def cmp(m, bucket):
        rep.trials += 1
        counts[bucket] += 1
        if _axioms(m) != oracle_axioms(m.grades):
            rep.fail(grades=m.grades)

    for size, diag in ((1, False), (2, False), (3, True)):
        for m in foset_grid(size, diag):
            cmp(m, "exhaustive")
    for _ in range(grid_sample):
        rows = [[Fraction(1) if i == j and rng.random() < 0.9 else rng.choice(GRID) for j in range(4)]
                for i in range(4)]
        cmp(FuzzyOrderMatrix(4, rows), "grid4")
    for k in range(random_trials):
        size = rng.randint(1, 8)
        if k % 2:
            m = random_fuzzy_order(rng, size)
            if k % 4 == 1:
                i, j = rng.randrange(size), rng.randrange(size)
                m = m.replace(i, j, rng.choice(GRID))
        else:
            m = FuzzyOrderMatrix(size, [[rng.choice(GRID) for _ in range(size)] for _ in range(size)])
        cmp(m, "random")
    rep.details.update(counts)
    return rep


def lattice_identities_report(samples=10_000, max_dim=8, seed=0) -> Report:
    rng = random.Random(seed)
    rep = Report("lattice", "lattice-identities")
    for _ in range(samples):
        rep.trials += 1
        n = rng.randint(1, max_dim)
        x, y = random_vec(rng, n), random_vec(rng, n)
        zero = Vec.zeros(n)
        if x != x.pos - x.neg:
            rep.fail(identity="x=x+-x-", x=x)
        if abs(x) != x.pos + x.neg:
            rep.fail(identity="|x|=x++x-", x=x)
        if x.pos & x.neg != zero:
            rep.fail(identity="x+&x-=0", x=x)
        if x + y != (x | y) + (x & y):
            rep.fail(identity="x+y=join+meet", x=x, y=y)
    return rep


def hom_witness_report(samples=1000, seed=0) -> Report:
    """``hom_witness_z`` and ``hom_witness_w`` on inputs built to meet their preconditions."""
    rng = random.Random(seed)
    rep = Report("2.1", "hom-witnesses")
    for _ in range(samples):
        rep.trials += 1
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        T = random_hom(rng, m, n)
        used = {T.source_column(i) for i in range(m)} - {None}
        x = Vec(abs(a) if j in used else a for j, a in enumerate(random_vec(rng, n)))
        z = hom_witness_z(T, x)
        if not (z.is_nonneg() and not any(T(z)) and (x + z).is_nonneg()):
            rep.fail(witness="z", x=x)
        y = Vec(x[j] - abs(a) if j in used else a
                for j, a in enumerate(random_vec(rng, n)))
        w = hom_witness_w(T, x, y)
        if not (w >= x and w >= y and T(w) == T(x)):
            rep.fail(witness="w", x=x, y=y)
    return rep


def image_theorems_report(instances=1000, samples=3, seed=0) -> Report:
    rng = random.Random(seed)
    rep = Report("2.2-2.7", "image-theorems")
    for k in range(instances):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        T = random_hom(rng, m, n)
        B = CoordinateIdeal(T.domain, {i for i in range(n) if rng.random() < 0.5})
        r = verify_image_theorems(T, B, samples=samples, seed=seed + k)
        rep.trials += 1
        if not r.passed:
            rep.fail(T=T.entries, B=B.labels(), first=r.failures[0])
    ex = strict_containment_example()
    rep.details["strict_example"] = ex
    if not ex:
        rep.fail(example="diag(1,1,0), B={1}")
    return rep


def strict_containment_example() -> bool:
    """``T = diag(1,1,0)``, ``B = {1}``: ``T(B^d)`` is strictly inside ``T(B)^d``."""
    T = RationalOperator.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    r = verify_image_theorems(T, CoordinateIdeal(T.domain, {0}), samples=5)
    return r.passed and r.details["strict_containment"] is True


def quotient_report(quotients=100, pairs_each=10, seed=0) -> Report:
    rng = random.Random(seed)
    rep = Report("3.5-3.7", "quotient")
    homs = 0
    for k in range(quotients):
        n = rng.randint(1, 5)
        sp = GradedSpace(n)
        q = QuotientSpace(sp, CoordinateIdeal(sp, {i for i in range(n) if rng.random() < 0.4}))
        lat = check_quotient_lattice(q, samples=pairs_each, seed=seed + k)
        proj = check_projection_hom(q, samples=5, seed=seed + k)
        rep.trials += lat.trials
        homs += proj.passed
        for r in (lat, proj):
            if not r.passed:
                rep.fail(check=r.name, ideal=q.ideal.labels(), first=r.failures[0])
    rep.details["projection_homs"] = f"{homs}/{quotients}"
    return rep


def battery_report(max_dim=4, trials=20, seed=0) -> Report:
    """All four conditions on every coordinate ideal of ``Q^n``, ``n <= max_dim``."""
    rep = Report("3.8", "archimedean-battery")
    for n in range(1, max_dim + 1):
        sp = GradedSpace(n)
        for r in range(n + 1):
            for coords in itertools.combinations(range(n), r):
                rep.trials += 1
                res = archimedean_battery(QuotientSpace(sp, CoordinateIdeal(sp, coords)), trials, seed)
                if not (res.archimedean and res.uniformly_closed and res.cond3 and res.cond4):
                    rep.fail(dim=n, ideal=[c + 1 for c in coords])
    return rep


def nonarch_report(k_max=1000) -> Report:
    demo = nonarchimedean_demo(k_max)
    rep = Report("3.8", "nonarchimedean-demo", trials=len(demo.rows),
                 details={"y_nonzero": demo.y_nonzero, "k_max": k_max})
    for row in demo.rows:
        if row.grade != Fraction(2, 3) or not row.dominated:
            rep.fail(k=row.k)
    if not demo.y_nonzero:
        rep.fail(reason="[y] = [0]")
    tr = truncation_witness(k_max)
    rep.details["truncation_in_ideal"] = tr.in_ideal and tr.within
    if not (tr.in_ideal and tr.within):
        rep.fail(reason="truncation witness")
    return rep


def stabilization_report(samples=1000, seed=0, scan=64) -> Report:
    """Closed-form stabilization index against a direct scan."""
    rng = random.Random(seed)
    rep = Report("3.9", "stabilization-index")
    for _ in range(samples):
        rep.trials += 1
        n = rng.randint(1, 6)
        sp = GradedSpace(n)
        x = random_vec(rng, n, num=30, den=4, nonneg=True, sparsity=0.2)
        y = random_vec(rng, n, num=30, den=4, nonneg=True, sparsity=0.3)
        m = stabilization_index(sp, x, y, verify=False)
        limit = x & (y * (m + scan))
        brute = next(k for k in range(1, m + scan + 1)
                     if all((x & (y * j)) == limit for j in range(k, m + scan + 1)))
        if brute != m:
            rep.fail(x=x, y=y, closed=m, scanned=brute)
    return rep


def principal_projection_report(trials=1000, seed=0) -> Report:
    rng = random.Random(seed)
    rep = Report("3.10", "principal-projection")
    per = 10
    for k in range(trials // per):
        n = rng.randint(1, 6)
        sp = GradedSpace(n)
        y = random_vec(rng, n, nonneg=True, sparsity=0.4)
        r = verify_principal_projection(sp, y, per, seed=seed + k)
        rep.trials += r.trials
        if not r.passed:
            rep.fail(y=y, first=r.failures[0])
    return rep


def theta_report(points=100, seed=0) -> Report:
    """``theta = T`` on M and sublinearity, spread over random instances."""
    rng = random.Random(seed)
    rep = Report("4.13", "theta-extension")
    for _ in range(points):
        rep.trials += 1
        n, m = rng.randint(1, 5), rng.randint(1, 4)
        M, T = random_sublattice(rng, n, m)
        th = lambda v: theta_extension(M, T, v)  # noqa: E731
        z = M.random_element(rng)
        if th(z) != T(z):
            rep.fail(check="agrees-on-M", z=z)
        x, y = random_vec(rng, n), random_vec(rng, n)
        lam = Fraction(rng.randint(0, 20), rng.randint(1, 5))
        tx, ty = th(x), th(y)
        if not th(x + y) <= tx + ty or th(x * lam) != tx * lam:
            rep.fail(check="sublinear", x=x, y=y, lam=lam)
        if th(x | y) != tx | ty:
            rep.fail(check="join", x=x, y=y)
    return rep


def factorize_report(instances=100, seed=0) -> Report:
    rng = random.Random(seed)
    rep = Report("5.1", "factorization")
    for _ in range(instances):
        rep.trials += 1
        Q, S, T = random_factorization(rng)
        S1 = factorize(Q, S, T)
        ok = (S1.compose(Q).entries == T.entries and S1.is_positive()
              and all(a <= b for r, s in zip(S1.entries, S.entries) for a, b in zip(r, s)))
        if not ok:
            rep.fail(Q=Q.entries, S=S.entries, T=T.entries)
    return rep


def mutation_reports(trials=500, seed=0):
    return [mutate(t, trials, seed).report() for t in TARGETS]


def run_suite(seed=0, scale=Fraction(1, 10)):
    """Every battery at ``scale`` times its acceptance size; deterministic in ``seed``."""
    s = lambda k: max(1, int(k * scale))  # noqa: E731
    reps = [
        foset_oracle_report(s(1000), s(5000), seed),
        lattice_identities_report(s(10_000), seed=seed),
        hom_witness_report(s(1000), seed),
        image_theorems_report(s(1000), seed=seed),
        quotient_report(s(100), 10, seed),
        battery_report(3, s(20), seed),
        nonarch_report(s(1000)),
        stabilization_report(s(1000), seed),
        principal_projection_report(s(1000), seed),
        theta_report(s(100), seed),
        factorize_report(s(100), seed),
    ]
    return reps + mutation_reports(s(500), seed)
