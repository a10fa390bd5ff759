"""Fuzzy ideals, bands and band projections in the graded model.

A subspace of the componentwise model is solid exactly when it is the span
of some set of unit vectors, so ideals are stored as coordinate sets.
Coordinates are 0-based here.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .convergence import GeomSequence
from .errors import InputError
from .linalg import Subspace, rank
from .rational import ZERO, ceil_div
from .report import Report
from .space import GradedSpace, Vec, random_vec

RATIOS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


@dataclass(frozen=True)
class CoordinateIdeal:
    ambient: GradedSpace
    coords: frozenset

    def __post_init__(self):
        c = frozenset(int(i) for i in self.coords)
        if any(not 0 <= i < self.ambient.dim for i in c):
            raise InputError(f"coordinates {sorted(c)} out of range for dim {self.ambient.dim}")
        object.__setattr__(self, "coords", c)

    def __contains__(self, x):
        return Vec(x).support() <= self.coords

    def basis(self):
        return [self.ambient.unit(i) for i in sorted(self.coords)]

    def labels(self):
        """Coordinates as printed in reports and files (1-based)."""
        return [i + 1 for i in sorted(self.coords)]

    def subspace(self):
        return Subspace.coordinate(self.coords, self.ambient.dim)

    def spec(self):
        return SubspaceSpec(self.ambient, self.basis())

    def __and__(self, other):
        return CoordinateIdeal(self.ambient, self.coords & other.coords)

    def __or__(self, other):
        return CoordinateIdeal(self.ambient, self.coords | other.coords)

    def __le__(self, other):
        return self.coords <= other.coords

    @property
    def complement_coords(self):
        return frozenset(range(self.ambient.dim)) - self.coords

    def random_element(self, rng, nonneg=False):
        return random_vec(rng, self.ambient.dim, nonneg=nonneg).restrict(self.coords)


@dataclass(frozen=True)
class SubspaceSpec:
    ambient: GradedSpace
    basis: tuple = field(default_factory=tuple)

    def __post_init__(self):
        b = tuple(Vec(v) for v in self.basis)
        self.ambient.check(*b)
        object.__setattr__(self, "basis", b)

    def subspace(self):
        return Subspace(self.basis, self.ambient.dim)


@dataclass
class SolidityResult:
    solid: bool
    witness: tuple = None  # (x, y): y in the subspace, |x| <= |y|, x not in it


def is_solid(s: SubspaceSpec) -> SolidityResult:
    """Decide fuzzy solidity of ``span(s.basis)``.

    The span always sits inside the coordinate span of its support; it is
    solid iff the two have the same dimension. On failure the witness is a
    basis vector ``y`` with ``y_i != 0`` for a coordinate ``i`` whose unit
    vector is missing, and ``x = y_i e_i``.
    """
    n = s.ambient.dim
    supp = sorted({i for b in s.basis for i in b.support()})
    if rank(s.basis, n) == len(supp):
        return SolidityResult(True)
    sub = s.subspace()
    for i in supp:
        e = s.ambient.unit(i)
        if not sub.contains(e):
            y = next(b for b in s.basis if b[i] != 0)
            return SolidityResult(False, (s.ambient.unit(i, y[i]), y))
    raise AssertionError("rank deficit without a missing unit vector")  # pragma: no cover


def principal_lambda(x, y):
    """Least ``lam >= 0`` with ``|y| <= lam |x|``, or None if there is none."""
    x, y = Vec(x), Vec(y)
    lam = ZERO
    for a, b in zip(x, y):
        if b == 0:
            continue
        if a == 0:
            return None
        lam = max(lam, abs(b) / abs(a))
    return lam


def ideal_generated_by(sp: GradedSpace, D) -> CoordinateIdeal:
    """The smallest ideal containing ``D``: the coordinate span of the union of supports."""
    D = [Vec(d) for d in D]
    sp.check(*D)
    coords = frozenset().union(*(d.support() for d in D)) if D else frozenset()
    return CoordinateIdeal(sp, coords)


def disjoint_complement(B: CoordinateIdeal) -> CoordinateIdeal:
    return CoordinateIdeal(B.ambient, B.complement_coords)


def band_projection(B: CoordinateIdeal, x):
    """Split ``x = x1 + x2`` with ``x1`` in ``B`` and ``x2`` in its disjoint complement."""
    x = Vec(x)
    B.ambient.check(x)
    x1 = x.restrict(B.coords)
    return x1, x - x1


def is_band(B: CoordinateIdeal) -> bool:
    return disjoint_complement(disjoint_complement(B)) == B


def stabilization_index(sp: GradedSpace, x, y, verify=True) -> int:
    """Least ``m >= 1`` with ``x & (n y) == x & (m y)`` for every ``n >= m``.

    Coordinatewise ``min(x_i, n y_i)`` stops moving once ``n y_i >= x_i``,
    so ``m = max(1, max ceil(x_i / y_i) over y_i > 0)``. With ``verify``
    the closed form is confirmed by scanning ``n = 1 .. m + 5``.
    """
    x, y = Vec(x), Vec(y)
    sp.check(x, y)
    if not (x.is_nonneg() and y.is_nonneg()):
        raise InputError("stabilization_index needs x, y >= 0")
    m = 1
    for a, b in zip(x, y):
        if b > 0:
            m = max(m, ceil_div(a, b))
    if verify:
        top = x & (y * m)
        if m > 1 and (x & (y * (m - 1))) == top:
            raise AssertionError("closed-form index is not minimal")
        for n in range(m, m + 6):
            if (x & (y * n)) != top:
                raise AssertionError("closed-form index does not stabilize")
    return m


def sup_of_multiples(sp: GradedSpace, x, y) -> Vec:
    """``sup_n x & (n y)`` for ``x, y >= 0``, reached at the stabilization index."""
    m = stabilization_index(sp, x, y)
    return Vec(x) & (Vec(y) * m)


def verify_principal_projection(sp: GradedSpace, y, samples: int, seed: int = 0) -> Report:
    """Principal ideals are projection bands.

    For random ``x >= 0`` the band projection of ``x`` onto ``I_y`` must
    equal ``sup_n x & (n y)``.
    """
    y = Vec(y)
    sp.check(y)
    if not y.is_nonneg():
        raise InputError("y must be >= 0")
    A = ideal_generated_by(sp, [y])
    rng = random.Random(seed)
    rep = Report("3.10", "principal-projection", details={"ideal": A.labels()})
    for _ in range(samples):
        x = random_vec(rng, sp.dim, nonneg=True, sparsity=0.2)
        s = sup_of_multiples(sp, x, y)
        p = band_projection(A, x)[0]
        rep.trials += 1
        if s != p:
            rep.fail(x=x, sup=s, projection=p)
    return rep


def check_sigma_ideal(B: CoordinateIdeal, sequences) -> list:
    """Spot-check the sigma-ideal property on increasing geometric sequences.

    Sequences whose terms all lie in ``B+`` must have their supremum (the
    base) in ``B``. Returns the offending sequences.
    """
    bad = []
    for seq in sequences:
        if not seq.is_increasing():
            continue
        # two terms determine base and drift, so checking k = 1, 2 covers all k
        terms = [seq.term(1), seq.term(2)]
        if all(t in B and t.is_nonneg() for t in terms) and seq.limit not in B:
            bad.append(seq)
    return bad


def random_increasing_sequences(rng, B: CoordinateIdeal, count, inside=True):
    """Increasing nonnegative geometric sequences, optionally supported in ``B``."""
    dim = B.ambient.dim
    out = []
    for _ in range(count):
        drift = -random_vec(rng, dim, nonneg=True, sparsity=0.3)
        base = random_vec(rng, dim, nonneg=True) + (-drift)
        if inside:
            base, drift = base.restrict(B.coords), drift.restrict(B.coords)
        r = rng.choice(RATIOS)
        out.append(GeomSequence(base, drift, r))
    return out

