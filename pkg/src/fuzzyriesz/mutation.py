"""Single-entry mutation harness.

Each trial takes a known-valid instance, perturbs one entry, and asks an
independent oracle whether the mutant is still valid. Valid mutants are
re-rolled; invalid ones must be flagged by the package's checker.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OracleDisagreement
from .foset import FuzzyOrderMatrix, validate_fuzzy_order
from .ideals import CoordinateIdeal, SubspaceSpec, is_solid
from .linalg import Subspace
from .operators import random_hom, semantic_hom, structural_hom
from .quotient import QuotientSpace, grade_by_correction, project
from .rational import ONE, ZERO
from .report import Report
from .space import GradedSpace, Vec, random_vec

TARGETS = ("foset", "hom", "ideal", "quotient")
GRADES = tuple(Fraction(g) for g in ("0", "1/3", "1/2", "3/5", "2/3", "1"))
MAX_REROLLS = 50


# -- independent oracles ------------------------------------------------------

def oracle_axioms(rows):
    """Plain loops over the three axioms: ``(reflexive, antisymmetric, transitive)``."""
    n = len(rows)
    refl = all(rows[x][x] == 1 for x in range(n))
    anti = all(rows[x][y] + rows[y][x] <= 1 for x in range(n) for y in range(n) if x != y)
    trans = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if rows[x][z] < min(rows[x][y], rows[y][z]):
                    trans = False
    return refl, anti, trans


def oracle_fuzzy_order(rows) -> bool:
    return all(oracle_axioms(rows))


def maxmin_closure(rows):
    n = len(rows)
    rows = [list(r) for r in rows]
    changed = True
    while changed:
        changed = False
        for x in range(n):
            for z in range(n):
                best = max(min(rows[x][y], rows[y][z]) for y in range(n))
                if best > rows[x][z]:
                    rows[x][z] = best
                    changed = True
    return rows


def random_fuzzy_order(rng, size):
    """A random valid fuzzy order: forward grades along a hidden linear order, closed up."""
    perm = list(range(size))
    rng.shuffle(perm)
    pos = {v: i for i, v in enumerate(perm)}
    while True:
        rows = [[ZERO] * size for _ in range(size)]
        for x in range(size):
            rows[x][x] = ONE
            for y in range(size):
                if pos[x] < pos[y] and rng.random() < 0.5:
                    rows[x][y] = rng.choice(GRADES[1:])
                elif pos[x] > pos[y] and rng.random() < 0.15:
                    rows[x][y] = Fraction(1, 3)
        rows = maxmin_closure(rows)
        if oracle_fuzzy_order(rows):
            return FuzzyOrderMatrix(size, rows)


def ideal_oracle(basis, n) -> bool:
    """The span equals the coordinate span of its support."""
    sub = Subspace(basis, n)
    supp = {i for b in basis for i, a in enumerate(b) if a != 0}
    return sub == Subspace.coordinate(supp, n)


def random_ideal_basis(rng, n):
    """A spanning set of a coordinate ideal that hides its coordinate structure."""
    coords = sorted(rng.sample(range(n), rng.randint(1, n)))
    units = [Vec.unit(n, i) for i in coords]
    basis = []
    for i, u in enumerate(units):
        v = u * Fraction(rng.randint(1, 5), rng.randint(1, 3))
        if i + 1 < len(units) and rng.random() < 0.5:
            v = v + units[i + 1] * rng.randint(-3, 3)
        basis.append(v)
    return basis


def nu_table_check(q: QuotientSpace, reps, table, rng) -> list:
    """Entries of ``table`` that disagree with the correction criterion on shifted representatives."""
    bad = []
    for i, f in enumerate(reps):
        for j, g in enumerate(reps):
            shift = lambda v: v + random_vec(rng, q.ambient.dim).restrict(q.ideal.coords)  # noqa: E731
            if table[i][j] != grade_by_correction(q, shift(f), shift(g)):
                bad.append((i, j))
    if not validate_fuzzy_order(FuzzyOrderMatrix(len(reps), table)).ok:
        bad.append("axioms")
    return bad


# -- harness --------------------------------------------------------------------

@dataclass
class MutationResult:
    target: str
    trials: int
    detected: int = 0
    rerolled: int = 0
    missed: list = field(default_factory=list)
    exhausted: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.missed and not self.exhausted and self.detected == self.trials

    def summary(self):
        return f"{self.detected}/{self.trials} mutants detected ({self.rerolled} re-rolled as still valid)"

    def report(self):
        rep = Report("mutation", f"mutate-{self.target}", trials=self.trials,
                     details={"detected": self.detected, "rerolled": self.rerolled})
        for m in self.missed:
            rep.fail(kind="missed", instance=m)
        for m in self.exhausted:
            rep.fail(kind="retry-budget", instance=m)
        return rep


def _foset_trial(rng):
    m = random_fuzzy_order(rng, rng.randint(2, 5))
    i, j = rng.randrange(m.size), rng.randrange(m.size)
    g = rng.choice([g for g in GRADES if g != m(i, j)])
    mut = m.replace(i, j, g)
    if oracle_fuzzy_order(mut.grades):
        return None, (i, j, g)
    return not validate_fuzzy_order(mut).ok, (mut.grades, i, j, g)


def _hom_trial(rng):
    T = random_hom(rng, rng.randint(1, 4), rng.randint(1, 4))
    i, j = rng.randrange(T.rows), rng.randrange(T.cols)
    v = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    if v == T.entries[i][j]:
        return None, (i, j, v)
    mut = T.replace(i, j, v)
    s_ok, _ = structural_hom(mut)
    m_ok, _ = semantic_hom(mut, samples=10)
    if s_ok != m_ok:
        raise OracleDisagreement(f"hom oracles disagree on {mut.entries}")
    if s_ok:
        return None, (i, j, v)
    return True, mut.entries


def _ideal_trial(rng):
    n = rng.randint(2, 5)
    basis = random_ideal_basis(rng, n)
    k, j = rng.randrange(len(basis)), rng.randrange(n)
    v = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    b = list(basis[k])
    if b[j] == v:
        return None, (k, j, v)
    b[j] = v
    mut = basis[:k] + [Vec(b)] + basis[k + 1:]
    if ideal_oracle(mut, n):
        return None, (k, j, v)
    res = is_solid(SubspaceSpec(GradedSpace(n), mut))
    if res.solid:
        return False, mut
    x, y = res.witness
    sub = Subspace(mut, n)
    flagged = sub.contains(y) and abs(x) <= abs(y) and not sub.contains(x)
    return flagged, mut


def _quotient_trial(rng):
    n = rng.randint(1, 4)
    sp = GradedSpace(n)
    q = QuotientSpace(sp, CoordinateIdeal(sp, frozenset(rng.sample(range(n), rng.randint(0, n)))))
    reps = []
    for _ in range(rng.randint(2, 4)):
        f = random_vec(rng, n, num=5, den=2)
        reps.append(f + random_vec(rng, n, nonneg=True, sparsity=0.5) if reps and rng.random() < 0.5 else f)
    classes = [project(q, f) for f in reps]
    table = [[ONE if F == G else (Fraction(2, 3) if F.representative <= G.representative else ZERO)
              for G in classes] for F in classes]
    i, j = rng.randrange(len(reps)), rng.randrange(len(reps))
    g = rng.choice([g for g in GRADES if g != table[i][j]])
    table[i][j] = g
    # any change to a nu entry leaves the three-valued rule, so every mutant is invalid
    return bool(nu_table_check(q, reps, table, rng)), (q.ideal.labels(), reps, i, j, g)


_TRIALS = {"foset": _foset_trial, "hom": _hom_trial, "ideal": _ideal_trial, "quotient": _quotient_trial}


def mutate(target: str, trials: int, seed: int = 0) -> MutationResult:
    if target not in _TRIALS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    rng = random.Random(seed)
    res = MutationResult(target, trials)
    run = _TRIALS[target]
    for _ in range(trials):
        for _attempt in range(MAX_REROLLS):
            flagged, info = run(rng)
            if flagged is None:
                res.rerolled += 1
                continue
            if flagged:
                res.detected += 1
            else:
                res.missed.append(info)
            break
        else:
            res.exhausted.append(info)
    return res
