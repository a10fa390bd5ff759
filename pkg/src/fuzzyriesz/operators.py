"""Linear operators between graded spaces.

An operator is an exact rational matrix. In the componentwise model a
matrix is a Riesz homomorphism exactly when each row has at most one
nonzero entry and that entry is positive; :func:`classify_operator` decides
this structurally and confirms it against the defining equation
``T(x | y) == Tx | Ty``.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .convergence import GeomSequence, uniform_cauchy
from .errors import InputError, OracleDisagreement, PreconditionError
from .ideals import (CoordinateIdeal, check_sigma_ideal, disjoint_complement,
                     ideal_generated_by, is_solid, SubspaceSpec, band_projection,
                     random_increasing_sequences)
from .linalg import Subspace, matvec, nullspace, solve
from .rational import ZERO, as_rational
from .report import Report
from .space import DEFAULT_ALPHA, GradedSpace, Vec, random_vec


@dataclass(frozen=True)
class RationalOperator:
    entries: tuple
    domain: GradedSpace
    codomain: GradedSpace

    def __post_init__(self):
        rows = tuple(tuple(as_rational(a) for a in r) for r in self.entries)
        if len(rows) != self.codomain.dim:
            raise InputError(f"{len(rows)} rows but codomain has dim {self.codomain.dim}")
        if any(len(r) != self.domain.dim for r in rows):
            raise InputError(f"rows must have {self.domain.dim} entries (domain dim)")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows, cols=None, alpha=DEFAULT_ALPHA):
        rows = [list(r) for r in rows]
        n = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(rows, GradedSpace(n, alpha), GradedSpace(len(rows), alpha))

    @classmethod
    def zero(cls, m, n, alpha=DEFAULT_ALPHA):
        return cls.from_rows([[0] * n for _ in range(m)], cols=n, alpha=alpha)

    @classmethod
    def identity(cls, n, alpha=DEFAULT_ALPHA):
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                             cols=n, alpha=alpha)

    @property
    def rows(self):
        return self.codomain.dim

    @property
    def cols(self):
        return self.domain.dim

    def __call__(self, x):
        x = Vec(x)
        self.domain.check(x)
        return Vec(matvec(self.entries, x))

    def column(self, j):
        return Vec(r[j] for r in self.entries)

    def compose(self, other):
        """``self o other``."""
        if other.codomain.dim != self.domain.dim:
            raise InputError("cannot compose: inner dimensions differ")
        cols = [self(other.column(j)) for j in range(other.cols)]
        rows = [[c[i] for c in cols] for i in range(self.rows)]
        return RationalOperator(rows, other.domain, self.codomain)

    def __sub__(self, other):
        rows = [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        return RationalOperator(rows, self.domain, self.codomain)

    def is_positive(self):
        return all(a >= 0 for r in self.entries for a in r)

    def replace(self, i, j, value):
        rows = [list(r) for r in self.entries]
        rows[i][j] = as_rational(value)
        return RationalOperator(rows, self.domain, self.codomain)

    def kernel(self):
        return Subspace(nullspace(self.entries, self.cols), self.cols)

    def range(self):
        return Subspace([self.column(j) for j in range(self.cols)], self.rows)

    def source_column(self, i):
        """For a homomorphism: the column feeding row ``i`` (None for a zero row)."""
        return next((j for j, a in enumerate(self.entries[i]) if a != 0), None)


# -- homomorphism decision ---------------------------------------------------

def structural_hom(T: RationalOperator):
    """Row-support criterion. Returns ``(ok, witness_row)``."""
    for i, row in enumerate(T.entries):
        nz = [a for a in row if a != 0]
        if len(nz) > 1 or (nz and nz[0] < 0):
            return False, i
    return True, None


def semantic_hom(T: RationalOperator, samples=1000, seed=0):
    """Test ``T(x | y) == Tx | Ty`` on all pairs of signed unit vectors and random pairs.

    Returns ``(ok, witness_pair)``.
    """
    n = T.cols
    units = [T.domain.unit(i, s) for i in range(n) for s in (1, -1)]
    for x in units:
        for y in units:
            if T(x | y) != T(x) | T(y):
                return False, (x, y)
    rng = random.Random(seed)
    for _ in range(samples):
        x, y = random_vec(rng, n, num=5, den=3), random_vec(rng, n, num=5, den=3)
        if T(x | y) != T(x) | T(y):
            return False, (x, y)
    return True, None


def order_bound_interval(T: RationalOperator, u):
    """``|T|u``: every ``x`` with ``|x| <= u`` has ``|Tx| <= |T|u``."""
    absT = RationalOperator([[abs(a) for a in r] for r in T.entries], T.domain, T.codomain)
    return absT(u)


def _check_order_bounded(T, rng, trials=3):
    n = T.cols
    if n == 0:
        return True
    for _ in range(trials):
        u = random_vec(rng, n, nonneg=True)
        bound = order_bound_interval(T, u)
        corners = []
        if n <= 8:
            for mask in range(1 << n):
                corners.append(Vec(u[i] if mask >> i & 1 else -u[i] for i in range(n)))
        for _ in range(10):
            corners.append(Vec(u[i] * Fraction(rng.randint(-10, 10), 10) for i in range(n)))
        if any(not abs(T(x)) <= bound for x in corners):
            return False
    return True


@dataclass
class Classification:
    positive: bool
    order_bounded: bool
    riesz_hom: bool
    sigma_hom: bool
    witnesses: dict = field(default_factory=dict)


def classify_operator(T: RationalOperator, samples=1000, seed=0) -> Classification:
    """Positivity, order boundedness, Riesz and sigma homomorphism.

    The Riesz-homomorphism verdict is computed twice (row structure and the
    defining lattice equation); if they disagree :class:`OracleDisagreement`
    is raised. A homomorphism is confirmed to be a sigma-homomorphism by
    checking that its kernel passes the sigma-ideal test on increasing
    geometric sequences.
    """
    rng = random.Random(seed)
    witnesses = {}
    positive = T.is_positive()
    if not positive:
        witnesses["negative_entry"] = next((i, j) for i, r in enumerate(T.entries)
                                           for j, a in enumerate(r) if a < 0)
    s_ok, s_row = structural_hom(T)
    m_ok, m_pair = semantic_hom(T, samples, seed)
    if s_ok != m_ok:
        raise OracleDisagreement(f"structural={s_ok} semantic={m_ok} for {T.entries}")
    if not s_ok:
        witnesses["row"] = s_row
        witnesses["pair"] = m_pair
    sigma = False
    if s_ok:
        K = kernel_ideal(T)
        seqs = random_increasing_sequences(rng, K, 10)
        sigma = not check_sigma_ideal(K, seqs)
        # homomorphisms are positive operators
        assert positive
    return Classification(positive, _check_order_bounded(T, rng), s_ok, sigma, witnesses)


def is_riesz_hom(T):
    return structural_hom(T)[0]


def _require_hom(T):
    ok, row = structural_hom(T)
    if not ok:
        raise PreconditionError(f"operator is not a Riesz homomorphism (row {row})")


def kernel_ideal(T: RationalOperator) -> CoordinateIdeal:
    """``Ker T`` as a coordinate ideal: the zero columns of a homomorphism."""
    _require_hom(T)
    coords = frozenset(j for j in range(T.cols) if all(r[j] == 0 for r in T.entries))
    K = CoordinateIdeal(T.domain, coords)
    if T.kernel() != K.subspace():
        raise AssertionError("zero columns do not span the kernel")  # pragma: no cover
    return K


# -- witnesses from the homomorphism characterisation -------------------------

def hom_witness_z(T: RationalOperator, x) -> Vec:
    """For ``Tx >= 0``: ``z = x^-`` satisfies ``z >= 0``, ``Tz = 0``, ``x + z >= 0``."""
    _require_hom(T)
    x = Vec(x)
    T.domain.check(x)
    if not T(x).is_nonneg():
        raise PreconditionError(f"Tx = {T(x)} is not >= 0")
    z = x.neg
    if not z.is_nonneg():
        raise AssertionError("z is not >= 0")  # pragma: no cover
    if any(T(z)):
        raise AssertionError("z is not in Ker T")
    if not (x + z).is_nonneg():
        raise AssertionError("x + z is not >= 0")  # pragma: no cover
    return z


def hom_witness_w(T: RationalOperator, x, y) -> Vec:
    """For ``Ty <= Tx``: ``w = x + (x - y)^-`` satisfies ``w >= x``, ``w >= y``, ``Tw = Tx``."""
    _require_hom(T)
    x, y = Vec(x), Vec(y)
    T.domain.check(x, y)
    if not T(y) <= T(x):
        raise PreconditionError(f"Ty = {T(y)} is not <= Tx = {T(x)}")
    z = hom_witness_z(T, x - y)
    w = x + z
    if not (w >= x and w >= y and T(w) == T(x)):
        raise AssertionError("w fails its conditions")  # pragma: no cover
    return w


# -- image / preimage theorem battery -----------------------------------------

def _solve_preimage(T, y):
    return solve(T.entries, list(y), T.cols)


def _disjoint_complement_in_codomain(sub: Subspace, m):
    return Subspace.coordinate(frozenset(range(m)) - sub.support(), m)


def verify_image_theorems(T: RationalOperator, B: CoordinateIdeal, samples: int = 100,
                          seed: int = 0) -> Report:
    """Image and preimage facts for a Riesz homomorphism ``T`` and ideal ``B``.

    Checks, with exact subspace arithmetic:

    * images and preimages of Riesz subspaces are Riesz subspaces;
    * ``T(B)`` is an ideal of ``T(E)``, via the construction ``w = x & y^+``;
    * ``T(B1 & B2) == T(B1) & T(B2)``;
    * ``T^-1(B')`` is an ideal for coordinate ideals ``B'`` of the codomain;
    * ``T(I_z) == I_{Tz}`` inside ``T(E)`` for ``z >= 0``;
    * ``T(B^d) <= T(B)^d`` (recording whether the containment is strict);
    * ``T(B) + T(B^d) == T(E)`` with ``T(B)``, ``T(B^d)`` disjoint.
    """
    _require_hom(T)
    if B.ambient.dim != T.cols:
        raise InputError("ideal lives in a different space")
    rng = random.Random(seed)
    n, m = T.cols, T.rows
    rep = Report("2.2-2.7", "image-theorems", details={"B": B.labels()})
    range_ = T.range()
    TB = B.subspace().image(T.entries, m)

    for _ in range(samples):
        rep.trials += 1
        # 2.2: images of Riesz subspaces (here B itself) stay lattice-closed
        x, y = B.random_element(rng), B.random_element(rng)
        if not TB.contains(T(x) | T(y)) or T(x | y) != T(x) | T(y):
            rep.fail(thm="2.2", x=x, y=y)
        # 2.2(2): preimage of a codomain coordinate ideal is lattice-closed
        W = CoordinateIdeal(T.codomain, {i for i in range(m) if rng.random() < 0.5})
        pre = W.subspace().preimage(T.entries, n)
        p1, p2 = _random_in(pre, rng), _random_in(pre, rng)
        if not pre.contains(p1 | p2):
            rep.fail(thm="2.2(2)", x=p1, y=p2)

        # 2.3(1): for x in B+, z in T(E)+ with z <= Tx, z = T(x & y+) for a preimage y of z
        xp = B.random_element(rng, nonneg=True)
        z = T(random_vec(rng, n).pos) & T(xp)
        pre_z = _solve_preimage(T, z)
        if pre_z is None:
            rep.fail(thm="2.3", reason="z has no preimage", z=z)
        else:
            w = xp & Vec(pre_z).pos
            if w not in B or T(w) != z or not TB.contains(z):
                rep.fail(thm="2.3", x=xp, z=z, w=w)

        # 2.3(2)
        B1 = CoordinateIdeal(T.domain, {i for i in range(n) if rng.random() < 0.5})
        B2 = CoordinateIdeal(T.domain, {i for i in range(n) if rng.random() < 0.5})
        lhs = (B1 & B2).subspace().image(T.entries, m)
        rhs = B1.subspace().image(T.entries, m).intersection(B2.subspace().image(T.entries, m))
        if lhs != rhs:
            rep.fail(thm="2.3(2)", B1=B1.labels(), B2=B2.labels())

        # 2.4: preimage of a coordinate ideal is solid
        if not is_solid(SubspaceSpec(T.domain, [Vec(b) for b in pre.basis])).solid:
            rep.fail(thm="2.4", W=W.labels())

        # 2.5: T(I_z) is the principal ideal of Tz inside T(E)
        zz = random_vec(rng, n, nonneg=True, sparsity=0.5)
        Iz = ideal_generated_by(T.domain, [zz])
        img = Iz.subspace().image(T.entries, m)
        principal = range_.intersection(Subspace.coordinate(T(zz).support(), m))
        if img != principal:
            rep.fail(thm="2.5", z=zz)

    # 2.6 and 2.7 are exact statements about B itself
    Bd = disjoint_complement(B)
    TBd = Bd.subspace().image(T.entries, m)
    TB_d = _disjoint_complement_in_codomain(TB, m)
    contained = TBd <= TB_d
    strict = contained and TBd != TB_d
    if not contained:
        rep.fail(thm="2.6", B=B.labels())
    rep.details["strict_containment"] = strict
    if TB + TBd != range_ or (TB.support() & TBd.support()):
        rep.fail(thm="2.7", B=B.labels())
    for _ in range(min(samples, 20)):
        x = random_vec(rng, n)
        x1, x2 = band_projection(B, x)
        if T(x) != T(x1) + T(x2) or not TB.contains(T(x1)) or not TBd.contains(T(x2)):
            rep.fail(thm="2.7", x=x)
    return rep


def _random_in(sub: Subspace, rng):
    v = Vec.zeros(sub.dim_ambient)
    for b in sub.basis:
        v = v + Vec(b) * Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return v


def image_containment(T: RationalOperator, B: CoordinateIdeal):
    """``(T(B^d), T(B)^d)`` as subspaces of the codomain."""
    m = T.rows
    TB = B.subspace().image(T.entries, m)
    TBd = disjoint_complement(B).subspace().image(T.entries, m)
    return TBd, _disjoint_complement_in_codomain(TB, m)


# -- relative uniform convergence ---------------------------------------------

def verify_hom_preserves_cauchy(T: RationalOperator, seq: GeomSequence, w, eps_list=None) -> Report:
    """Images of w-uniform Cauchy sequences are Tw-uniform Cauchy.

    The image index must not exceed the source index for any ``eps``. The
    argument only uses positivity, so positive non-homomorphisms are
    accepted and noted rather than rejected.
    """
    if not T.is_positive():
        raise PreconditionError("operator is not positive")
    eps_list = eps_list or [Fraction(1, 2 ** k) for k in range(0, 8)]
    src = uniform_cauchy(seq, w, eps_list)
    if not src.cauchy:
        raise PreconditionError(f"source sequence is not w-uniform Cauchy: {src.reason}")
    img = uniform_cauchy(seq.image(T), T(w), eps_list)
    rep = Report("2.13(1)", "hom-preserves-cauchy", trials=len(eps_list),
                 details={"source_index": [src.index[e] for e in eps_list],
                          "image_index": [img.index.get(e) for e in eps_list] if img.cauchy else []})
    if not is_riesz_hom(T):
        rep.notes.append("operator is positive but not a Riesz homomorphism; "
                         "the statement still holds, so this is not a counterexample")
    if not img.cauchy:
        rep.fail(reason=img.reason)
    else:
        for e in eps_list:
            if img.index[e] > src.index[e]:
                rep.fail(eps=e, source=src.index[e], image=img.index[e])
    return rep


# -- random instances --------------------------------------------------------

def random_hom(rng, m, n, alpha=DEFAULT_ALPHA, density=0.7, num=9, den=4):
    """A random Riesz homomorphism: each row gets at most one positive entry."""
    rows = []
    for _ in range(m):
        row = [ZERO] * n
        if n and rng.random() < density:
            row[rng.randrange(n)] = Fraction(rng.randint(1, num), rng.randint(1, den))
        rows.append(row)
    return RationalOperator.from_rows(rows, cols=n, alpha=alpha)


def random_matrix(rng, m, n, lo=-5, hi=5, alpha=DEFAULT_ALPHA, sparsity=0.5):
    rows = [[ZERO if rng.random() < sparsity else Fraction(rng.randint(lo, hi)) for _ in range(n)]
            for _ in range(m)]
    return RationalOperator.from_rows(rows, cols=n, alpha=alpha)
