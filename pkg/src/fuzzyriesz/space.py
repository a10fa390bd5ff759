"""The graded componentwise model of a fuzzy Riesz space.

Vectors are rational n-tuples. ``mu(x, y)`` is 1 when ``x == y``, ``alpha``
when ``x <= y`` componentwise and ``x != y``, and 0 otherwise. Lattice
operations are the componentwise max and min.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .foset import FuzzyOrderMatrix
from .rational import HALF, ONE, ZERO, as_rational

DEFAULT_ALPHA = Fraction(2, 3)


class Vec(tuple):
    """Immutable rational vector with componentwise arithmetic and order.

    ``+``, ``-`` and scalar ``*`` act coordinatewise; ``<=`` is the
    componentwise partial order (so ``x < y`` means ``x <= y and x != y``).
    ``|`` and ``&`` are join and meet.
    """

    __slots__ = ()

    def __new__(cls, coords=()):
        return super().__new__(cls, (as_rational(c) for c in coords))

    @classmethod
    def zeros(cls, n):
        return cls([ZERO] * n)

    @classmethod
    def unit(cls, n, i, scale=1):
        v = [ZERO] * n
        v[i] = as_rational(scale)
        return cls(v)

    @property
    def dim(self):
        return len(self)

    def _same(self, other):
        if not isinstance(other, tuple) or len(other) != len(self):
            raise InputError(f"dimension mismatch: {len(self)} vs "
                             f"{len(other) if isinstance(other, tuple) else other!r}")

    def __add__(self, other):
        self._same(other)
        return Vec(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._same(other)
        return Vec(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Vec(-a for a in self)

    def __mul__(self, s):
        s = as_rational(s)
        return Vec(s * a for a in self)

    __rmul__ = __mul__

    def __truediv__(self, s):
        s = as_rational(s)
        return Vec(a / s for a in self)

    def __or__(self, other):
        self._same(other)
        return Vec(max(a, b) for a, b in zip(self, other))

    def __and__(self, other):
        self._same(other)
        return Vec(min(a, b) for a, b in zip(self, other))

    def __le__(self, other):
        self._same(other)
        return all(a <= b for a, b in zip(self, other))

    def __ge__(self, other):
        self._same(other)
        return all(a >= b for a, b in zip(self, other))

    def __lt__(self, other):
        return self <= other and tuple(self) != tuple(other)

    def __gt__(self, other):
        return self >= other and tuple(self) != tuple(other)

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return tuple.__ne__(self, other)

    def __hash__(self):
        return tuple.__hash__(self)

    @property
    def pos(self):
        return Vec(max(a, ZERO) for a in self)

    @property
    def neg(self):
        return Vec(max(-a, ZERO) for a in self)

    def __abs__(self):
        return Vec(abs(a) for a in self)

    def support(self):
        return frozenset(i for i, a in enumerate(self) if a != 0)

    def is_nonneg(self):
        return all(a >= 0 for a in self)

    def restrict(self, coords):
        """Keep the listed coordinates, zero the rest."""
        return Vec(a if i in coords else ZERO for i, a in enumerate(self))

    def __repr__(self):
        return "Vec(" + ", ".join(str(a) for a in self) + ")"


@dataclass(frozen=True)
class GradedSpace:
    dim: int
    alpha: Fraction = DEFAULT_ALPHA

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 0:
            raise InputError(f"dim must be a nonnegative integer, got {self.dim!r}")
        a = as_rational(self.alpha)
        if not HALF < a <= ONE:
            raise InputError(f"grade alpha must satisfy 1/2 < alpha <= 1, got {a}")
        object.__setattr__(self, "alpha", a)

    def vec(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = coords[0]
        v = Vec(coords)
        self.check(v)
        return v

    def zero(self):
        return Vec.zeros(self.dim)

    def unit(self, i, scale=1):
        return Vec.unit(self.dim, i, scale)

    def basis(self):
        return [self.unit(i) for i in range(self.dim)]

    def check(self, *vs):
        for v in vs:
            if len(v) != self.dim:
                raise InputError(f"vector of length {len(v)} in a space of dim {self.dim}")

    def grade(self, x, y):
        return order_grade(self, x, y)


def order_grade(sp: GradedSpace, x, y) -> Fraction:
    sp.check(x, y)
    if tuple(x) == tuple(y):
        return ONE
    if all(a <= b for a, b in zip(x, y)):
        return sp.alpha
    return ZERO


def leq(sp, x, y):
    """``x <= y`` holds, i.e. ``mu(x, y) > 1/2``."""
    return order_grade(sp, x, y) > HALF


@dataclass(frozen=True)
class LatticeOps:
    join: Vec
    meet: Vec
    pos: Vec
    neg: Vec
    abs: Vec


def lattice_ops(sp: GradedSpace, x, y) -> LatticeOps:
    """Join and meet of the pair; positive part, negative part and modulus of ``x``."""
    x, y = Vec(x), Vec(y)
    sp.check(x, y)
    return LatticeOps(join=x | y, meet=x & y, pos=x.pos, neg=x.neg, abs=abs(x))


def finite_subfoset(sp: GradedSpace, vectors, grade=None):
    """Tabulate ``mu`` on a list of distinct vectors as a FuzzyOrderMatrix."""
    grade = grade or (lambda a, b: order_grade(sp, a, b))
    rows = [[grade(a, b) for b in vectors] for a in vectors]
    return FuzzyOrderMatrix(len(vectors), rows)


# -- random generation -------------------------------------------------------

def random_rational(rng: random.Random, num=100, den=20) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_vec(rng, dim, num=100, den=20, nonneg=False, sparsity=0.0) -> Vec:
    out = []
    for _ in range(dim):
        if sparsity and rng.random() < sparsity:
            out.append(ZERO)
            continue
        q = random_rational(rng, num, den)
        out.append(abs(q) if nonneg else q)
    return Vec(out)


def random_positive_scalar(rng, num=100, den=20) -> Fraction:
    return Fraction(rng.randint(1, num), rng.randint(1, den))


# -- checks ------------------------------------------------------------------

@dataclass
class CompatibilityReport:
    samples: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def check_compatibility(sp: GradedSpace, samples: int, seed: int = 0, grade=None) -> CompatibilityReport:
    """Translation and positive-scaling compatibility of the fuzzy order.

    ``grade`` substitutes a different grading function (used by the mutation
    harness to confirm a corrupted order is caught).
    """
    if samples < 1:
        raise InputError("samples must be >= 1")
    grade = grade or (lambda a, b: order_grade(sp, a, b))
    rng = random.Random(seed)
    rep = CompatibilityReport(samples)
    for k in range(samples):
        x1 = random_vec(rng, sp.dim)
        # bias toward comparable pairs, otherwise the implication is vacuous
        x2 = x1 + random_vec(rng, sp.dim, nonneg=True, sparsity=0.3) if k % 4 else random_vec(rng, sp.dim)
        if k % 10 == 0:
            x2 = x1
        x = random_vec(rng, sp.dim)
        lam = random_positive_scalar(rng)
        g = grade(x1, x2)
        if g <= HALF:
            continue
        gt = grade(x1 + x, x2 + x)
        if g > gt:
            rep.violations.append(("translation", x1, x2, x, g, gt))
        gs = grade(lam * x1, lam * x2)
        if g > gs:
            rep.violations.append(("scaling", x1, x2, lam, g, gs))
    return rep


def archimedean_witness(x, bound):
    """A scalar ``lam > 0`` with ``lam * x`` not below ``bound``.

    ``x`` must have a positive coordinate. The scalar is built at the first
    such coordinate ``i`` as ``|bound_i| / x_i + 1``.
    """
    x, bound = Vec(x), Vec(bound)
    i = next((i for i, a in enumerate(x) if a > 0), None)
    if i is None:
        raise InputError("x has no positive coordinate")
    return abs(bound[i]) / x[i] + 1


def check_archimedean(sp: GradedSpace, samples: int = 200, seed: int = 0) -> bool:
    """Verify that no ray ``{lam * x : lam > 0}``, ``x > 0``, is bounded above.

    For each sampled ``x > 0`` and candidate bound ``b`` the explicit scalar
    from :func:`archimedean_witness` must push ``lam * x`` past ``b``. Unit
    vectors are always among the samples.
    """
    if sp.dim == 0:
        return True
    rng = random.Random(seed)
    xs = sp.basis() + [random_vec(rng, sp.dim, nonneg=True, sparsity=0.4) for _ in range(samples)]
    for x in xs:
        if not (x > sp.zero()):
            continue
        for _ in range(3):
            b = random_vec(rng, sp.dim)
            lam = archimedean_witness(x, b)
            if lam <= 0 or leq(sp, lam * x, b):
                return False
    return True
