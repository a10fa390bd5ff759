"""Symbolic sequences ``c0 + c1/n + c2/n^2`` with finitely many patched values.

This is enough to house the constant sequence ``e``, ``y = (1/n)`` and the
generator ``x = (1/n^2)``, to decide pointwise comparison for all ``n >= 1``,
and to decide membership in the principal ideal of ``x``. On top of that it
certifies that the quotient by that ideal is not Archimedean.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .rational import ONE, ZERO, as_rational, fmt
from .quotient import QUOTIENT_GRADE


@dataclass(frozen=True)
class SeqTerm:
    c0: Fraction = ZERO
    c1: Fraction = ZERO
    c2: Fraction = ZERO
    patch: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        p = {}
        for n, v in dict(self.patch).items():
            if isinstance(n, bool) or int(n) != n or int(n) < 1:
                raise InputError(f"patch index must be a positive integer, got {n!r}")
            p[int(n)] = as_rational(v)
        object.__setattr__(self, "patch", p)

    def __hash__(self):
        return hash((self.c0, self.c1, self.c2, tuple(sorted(self.patch.items()))))

    def closed(self, n):
        v = self.c0
        if self.c1:
            v += self.c1 / n
        if self.c2:
            v += self.c2 / (n * n)
        return v

    def __call__(self, n):
        if n < 1:
            raise InputError("sequences are indexed from n = 1")
        v = self.patch.get(n)
        return self.closed(n) if v is None else v

    def _at(self, n):
        v = self.patch.get(n)
        return self.closed(n) if v is None else v

    def _zip(self, other, op):
        keys = set(self.patch) | set(other.patch)
        return SeqTerm(op(self.c0, other.c0), op(self.c1, other.c1), op(self.c2, other.c2),
                       {n: op(self._at(n), other._at(n)) for n in keys})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return self * -1

    def __mul__(self, s):
        s = as_rational(s)
        return SeqTerm(self.c0 * s, self.c1 * s, self.c2 * s,
                       {n: v * s for n, v in self.patch.items()})

    __rmul__ = __mul__

    def to_json(self):
        return {"c0": fmt(self.c0), "c1": fmt(self.c1), "c2": fmt(self.c2),
                "patch": {str(n): fmt(v) for n, v in sorted(self.patch.items())}}

    @classmethod
    def from_json(cls, d):
        return cls(d.get("c0", 0), d.get("c1", 0), d.get("c2", 0),
                   {int(k): v for k, v in d.get("patch", {}).items()})


E = SeqTerm(1)
Y = SeqTerm(0, 1)
GENERATOR = SeqTerm(0, 0, 1)


def identical(f: SeqTerm, g: SeqTerm) -> bool:
    # a nonzero closed form in 1/n has at most two zeros, so the closed
    # parts must coincide and only patched points remain
    if (f.c0, f.c1, f.c2) != (g.c0, g.c1, g.c2):
        return False
    return all(f(n) == g(n) for n in set(f.patch) | set(g.patch))


def nonneg_everywhere(d: SeqTerm) -> bool:
    """Decide ``d(n) >= 0`` for every ``n >= 1``.

    Off the patch, ``d(n) >= 0`` iff ``q(n) = c0 n^2 + c1 n + c2 >= 0``. If
    ``q`` is eventually negative there are infinitely many bad unpatched
    indices. Otherwise the integers where ``q < 0`` form one interval around
    the integer minimizer of ``q``; it is walked outward and every index in
    it must be patched, so the walk is bounded by the patch size.
    """
    if any(v < 0 for v in d.patch.values()):
        return False
    a, b, c = d.c0, d.c1, d.c2
    if a < 0 or (a == 0 and b < 0) or (a == 0 and b == 0 and c < 0):
        return False
    # only the sign of q matters, so clear denominators and stay in integers
    den = math.lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = (int(t * den) for t in (a, b, c))
    q = lambda n: (ia * n + ib) * n + ic  # noqa: E731

    if a > 0:
        v = -b / (2 * a)
        cands = {max(1, math.floor(v)), max(1, math.ceil(v))}
        start = min(cands, key=q)
    else:
        start = 1
    if q(start) >= 0:
        return True
    budget = len(d.patch) + 1
    for step in (1, -1):
        n = start
        while n >= 1 and q(n) < 0:
            if n not in d.patch:
                return False
            budget -= 1
            if budget < 0:  # pragma: no cover
                raise AssertionError("negative region longer than the patch")
            n += step
    return True


def leq_everywhere(f: SeqTerm, g: SeqTerm) -> bool:
    return nonneg_everywhere(g - f)


def eventual_grade(f: SeqTerm, g: SeqTerm) -> Fraction:
    """1 if equal, 2/3 if ``f(n) <= g(n)`` for every ``n >= 1``, else 0."""
    if identical(f, g):
        return ONE
    if leq_everywhere(f, g):
        return QUOTIENT_GRADE
    return ZERO


@dataclass
class Membership:
    member: bool
    lam: Fraction = None


def in_principal_ideal(f: SeqTerm, x0: SeqTerm = GENERATOR) -> Membership:
    """Membership in the principal ideal generated by ``(1/n^2)``.

    ``|f(n)| <= lam / n^2`` for all ``n`` needs ``c0 = c1 = 0``; the least
    such ``lam`` is the max of ``|c2|`` and ``|f(n)| n^2`` over the patch.
    """
    if not identical(x0, GENERATOR):
        raise InputError("only the generator (1/n^2) is supported")
    if f.c0 != 0 or f.c1 != 0:
        return Membership(False)
    lam = max([abs(f.c2)] + [abs(v) * (n * n) for n, v in f.patch.items()])
    return Membership(True, lam)


def correction(k: int) -> SeqTerm:
    """``a_k(n) = max(0, 1/n - 1/k)``, nonzero only for ``n < k``."""
    return SeqTerm(patch={n: Fraction(k - n, n * k) for n in range(1, k)})


@dataclass
class DemoRow:
    k: int
    grade: Fraction
    lam: Fraction
    dominated: bool


@dataclass
class DemoResult:
    rows: list
    y_nonzero: bool
    verdict: str

    @property
    def ok(self):
        return self.y_nonzero and all(r.grade == QUOTIENT_GRADE and r.dominated for r in self.rows)


def nonarchimedean_demo(N: int) -> DemoResult:
    """Certify ``nu([y], (1/k)[e]) = 2/3`` for ``k = 1..N`` and ``[y] != [0]``.

    For each ``k`` the correction ``a_k`` is shown to lie in the ideal and
    ``y - a_k <= (1/k) e`` is decided for every ``n``. The closed-form
    argument (``1/n <= 1/k`` once ``n >= k``) covers every ``k``; ``N`` only
    bounds the table.
    """
    if N < 1:
        raise InputError("N must be >= 1")
    rows = []
    for k in range(1, N + 1):
        a = correction(k)
        mem = in_principal_ideal(a)
        if not mem.member:
            raise AssertionError(f"a_{k} is not in the ideal")
        bound = E * Fraction(1, k)
        # y - a_k <= e/k  iff  (e/k - y) + a_k >= 0
        dom = nonneg_everywhere((bound - Y) + a)
        if not dom:
            raise AssertionError(f"y - a_{k} is not dominated by e/{k}")
        # classes differ since y - e/k has a constant term
        same = in_principal_ideal(bound - Y).member
        grade = ONE if same else QUOTIENT_GRADE
        rows.append(DemoRow(k, grade, mem.lam, dom))
    y_nonzero = not in_principal_ideal(Y).member
    verdict = ("not-archimedean: [y] != [0] and nu([y], [e]/k) = 2/3 for every k"
               if y_nonzero else "inconclusive")
    return DemoResult(rows, y_nonzero, verdict)


@dataclass
class Truncation:
    k: int
    term: SeqTerm
    in_ideal: bool
    within: bool


def truncation_witness(k: int) -> Truncation:
    """``y_k = y`` cut off after ``n = k``: in the ideal and ``|y - y_k| <= e/k``.

    Since ``y`` itself is not in the ideal, the ideal is not uniformly closed.
    """
    yk = SeqTerm(patch={n: Fraction(1, n) for n in range(1, k + 1)})
    d, bound = Y - yk, E * Fraction(1, k)
    within = leq_everywhere(d, bound) and leq_everywhere(-d, bound)
    return Truncation(k, yk, in_principal_ideal(yk).member, within)
