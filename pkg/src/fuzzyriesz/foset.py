"""Finite fuzzy ordered sets.

A fuzzy order on a finite carrier ``{0, ..., n-1}`` is an ``n x n`` table of
grades ``mu[x][y]`` in ``[0, 1]``. It is valid when it is reflexive,
antisymmetric in the ``mu(x,y) + mu(y,x) > 1 => x = y`` sense, and sup-min
transitive. The relation "x <= y holds" means ``mu(x, y) > 1/2``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InputError
from .rational import HALF, ONE, ZERO, as_rational

#: carrier size limit; every check here is an exhaustive O(n^3) scan
MAX_SIZE = 64


@dataclass(frozen=True)
class FuzzyOrderMatrix:
    size: int
    grades: tuple
    labels: tuple = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"size must be a positive integer, got {self.size!r}")
        if self.size > MAX_SIZE:
            raise InputError(f"carrier size {self.size} exceeds the limit {MAX_SIZE}")
        rows = tuple(tuple(as_rational(g) for g in row) for row in self.grades)
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise InputError(f"grades must be a {self.size}x{self.size} table")
        for i, row in enumerate(rows):
            for j, g in enumerate(row):
                if not ZERO <= g <= ONE:
                    raise InputError(f"grade mu({i},{j}) = {g} is outside [0, 1]")
        object.__setattr__(self, "grades", rows)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.size:
                raise InputError("need one label per carrier element")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows, labels=None):
        rows = [list(r) for r in rows]
        return cls(len(rows), rows, labels)

    def __call__(self, x, y):
        return self.grades[x][y]

    def label(self, i):
        return self.labels[i] if self.labels else str(i + 1)

    def index(self, name):
        if isinstance(name, int):
            return name
        if not self.labels or name not in self.labels:
            raise InputError(f"unknown carrier element {name!r}")
        return self.labels.index(name)

    def replace(self, i, j, grade):
        rows = [list(r) for r in self.grades]
        rows[i][j] = as_rational(grade)
        return FuzzyOrderMatrix(self.size, rows, self.labels)


@dataclass(frozen=True)
class FuzzySubset:
    size: int
    membership: tuple

    def __post_init__(self):
        m = tuple(as_rational(v) for v in self.membership)
        if len(m) != self.size:
            raise InputError("membership length does not match carrier size")
        if any(not ZERO <= v <= ONE for v in m):
            raise InputError("membership values must lie in [0, 1]")
        object.__setattr__(self, "membership", m)

    def __getitem__(self, y):
        return self.membership[y]

    def members(self):
        """Carrier elements with positive membership."""
        return frozenset(i for i, v in enumerate(self.membership) if v > 0)


@dataclass
class AxiomReport:
    reflexive: bool
    antisymmetric: bool
    transitive: bool
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return self.reflexive and self.antisymmetric and self.transitive


def _rank_encode(m):
    # order-preserving integer codes let max-min composition run in numpy
    levels = sorted({g for row in m.grades for g in row})
    code = {g: i for i, g in enumerate(levels)}
    return np.array([[code[g] for g in row] for row in m.grades], dtype=np.int64)


def validate_fuzzy_order(m: FuzzyOrderMatrix) -> AxiomReport:
    """Check the three fuzzy-order axioms.

    Each failed axiom contributes one witness, the first one met in
    row-major order: ``("reflexive", (x,))``, ``("antisymmetric", (x, y))``
    with ``x < y``, ``("transitive", (x, y, z))`` with
    ``min(mu(x,y), mu(y,z)) > mu(x,z)``.
    """
    n = m.size
    g = m.grades
    violations = []

    bad_diag = [x for x in range(n) if g[x][x] != ONE]
    if bad_diag:
        violations.append(("reflexive", (bad_diag[0],)))

    anti = None
    for x in range(n):
        for y in range(x + 1, n):
            if g[x][y] + g[y][x] > ONE:
                anti = (x, y)
                break
        if anti:
            break
    if anti:
        violations.append(("antisymmetric", anti))

    r = _rank_encode(m)
    # comp[x, z] = max_y min(r[x, y], r[y, z])
    comp = np.minimum(r[:, :, None], r[None, :, :]).max(axis=1)
    bad = np.argwhere(comp > r)
    if len(bad):
        x, z = (int(v) for v in bad[0])
        y = next(y for y in range(n) if min(r[x, y], r[y, z]) > r[x, z])
        violations.append(("transitive", (x, y, z)))

    return AxiomReport(
        reflexive=not bad_diag,
        antisymmetric=anti is None,
        transitive=not len(bad),
        violations=violations,
    )


def _check_index(m, x):
    if not 0 <= x < m.size:
        raise InputError(f"carrier index {x} out of range 0..{m.size - 1}")


def up_down_set(m: FuzzyOrderMatrix, x: int, direction: str) -> FuzzySubset:
    """``down``: ``y -> mu(y, x)``; ``up``: ``y -> mu(x, y)``."""
    _check_index(m, x)
    if direction == "down":
        return FuzzySubset(m.size, [m.grades[y][x] for y in range(m.size)])
    if direction == "up":
        return FuzzySubset(m.size, m.grades[x])
    raise InputError(f"direction must be 'up' or 'down', not {direction!r}")


def bounds(m: FuzzyOrderMatrix, A) -> tuple:
    """Upper and lower bound fuzzy sets ``(U(A), L(A))`` of a crisp subset."""
    A = sorted({m.index(x) for x in A})
    if not A:
        raise InputError("bounds of the empty set are not defined")
    for x in A:
        _check_index(m, x)
    g = m.grades
    upper, lower = [], []
    for y in range(m.size):
        ups = [g[x][y] for x in A]
        upper.append(ZERO if min(ups) <= HALF else min(ups))
        downs = [g[y][x] for x in A]
        lower.append(ZERO if min(downs) <= HALF else min(downs))
    return FuzzySubset(m.size, upper), FuzzySubset(m.size, lower)


def sup_inf(m: FuzzyOrderMatrix, A, mode: str = "sup"):
    """Supremum (or infimum) of ``A`` as a carrier index, or None.

    ``z = sup A`` when ``z`` is an upper bound and every upper bound ``y``
    lies in ``U({z})``, i.e. ``mu(z, y) > 1/2``.
    """
    U, L = bounds(m, A)
    if mode == "sup":
        cands = sorted(U.members())
        ok = lambda z, y: m.grades[z][y] > HALF  # noqa: E731
    elif mode == "inf":
        cands = sorted(L.members())
        ok = lambda z, y: m.grades[y][z] > HALF  # noqa: E731
    else:
        raise InputError(f"mode must be 'sup' or 'inf', not {mode!r}")
    for z in cands:
        if all(ok(z, y) for y in cands):
            return z
    return None


def crisp(relation, size, labels=None) -> FuzzyOrderMatrix:
    """Embed a crisp relation: grade 1 on related pairs, 0 elsewhere."""
    rows = [[ONE if (x == y or (x, y) in relation) else ZERO for y in range(size)]
            for x in range(size)]
    return FuzzyOrderMatrix(size, rows, labels)


def graded(relation, size, grade=Fraction(2, 3), labels=None) -> FuzzyOrderMatrix:
    """Diagonal 1, ``grade`` on the listed strict pairs, 0 elsewhere."""
    grade = as_rational(grade)
    rows = [[ONE if x == y else (grade if (x, y) in relation else ZERO) for y in range(size)]
            for x in range(size)]
    return FuzzyOrderMatrix(size, rows, labels)
