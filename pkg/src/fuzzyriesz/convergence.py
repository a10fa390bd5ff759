"""Geometric sequences ``x_k = a + b r^k`` and relative uniform convergence.

On this closed-form family every "for all eps, for all m, n > N" statement
reduces to a finite computation, so the regulator-based definitions of
uniform convergence and uniform Cauchy sequences become decidable.
Indices start at ``k = 1``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .rational import ONE, ZERO, as_rational
from .space import Vec


@dataclass(frozen=True)
class GeomSequence:
    base: Vec
    drift: Vec
    ratio: Fraction

    def __post_init__(self):
        object.__setattr__(self, "base", Vec(self.base))
        object.__setattr__(self, "drift", Vec(self.drift))
        r = as_rational(self.ratio)
        if not ZERO < r < ONE:
            raise InputError(f"ratio must satisfy 0 < r < 1, got {r}")
        if len(self.base) != len(self.drift):
            raise InputError("base and drift dimensions differ")
        object.__setattr__(self, "ratio", r)

    def term(self, k):
        return self.base + self.drift * self.ratio ** k

    @property
    def limit(self):
        return self.base

    def is_increasing(self):
        # b r^k decreases in k exactly where b >= 0, so x_k increases where b <= 0
        return all(b <= 0 for b in self.drift)

    def is_decreasing(self):
        return all(b >= 0 for b in self.drift)

    def image(self, op):
        """The image sequence ``T x_k = T a + (T b) r^k``."""
        return GeomSequence(op(self.base), op(self.drift), self.ratio)


@dataclass
class CauchyResult:
    cauchy: bool
    index: dict
    limit: Vec
    reason: str = ""


def _least_index(drift, w, eps, r):
    # least N >= 0 with |b_i| r^(N+1) <= eps w_i on supp(b)
    n = 0
    while True:
        t = r ** (n + 1)
        if all(abs(b) * t <= eps * wi for b, wi in zip(drift, w) if b != 0):
            return n
        n += 1


def uniform_cauchy(seq: GeomSequence, w, eps_list) -> CauchyResult:
    """Decide whether ``seq`` is a w-uniform Cauchy sequence.

    ``|x_m - x_n| = |b| |r^m - r^n|`` and its supremum over ``m, n > N`` is
    ``|b| r^(N+1)`` (approached as ``n -> oo``), so the least admissible
    index for ``eps`` is the least ``N`` with ``|b| r^(N+1) <= eps w``.
    The sequence converges w-uniformly to its base ``a``.
    """
    w = Vec(w)
    if len(w) != len(seq.drift):
        raise InputError("regulator dimension mismatch")
    if not w.is_nonneg():
        raise InputError("regulator w must be nonnegative")
    eps_list = [as_rational(e) for e in eps_list]
    if any(e <= 0 for e in eps_list):
        raise InputError("eps values must be positive")
    uncovered = [i for i, b in enumerate(seq.drift) if b != 0 and w[i] == 0]
    if uncovered:
        return CauchyResult(False, {}, seq.limit,
                            reason=f"w vanishes on drift coordinates {uncovered}")
    index = {e: _least_index(seq.drift, w, e, seq.ratio) for e in eps_list}
    return CauchyResult(True, index, seq.limit)


def scan_cauchy_index(seq: GeomSequence, w, eps, window=20, limit=10_000):
    """Brute-force oracle for the Cauchy index.

    Tests pairs ``m, n`` in ``N+1 .. N+window`` together with the limit
    point (the ``n -> oo`` end of the tail), for ``N = 0, 1, ...``.
    """
    w = Vec(w)
    eps = as_rational(eps)
    bound = w * eps
    for n0 in range(limit):
        pts = [seq.term(k) for k in range(n0 + 1, n0 + window + 1)] + [seq.limit]
        if all(abs(p - q) <= bound for p in pts for q in pts):
            return n0
    return None


def converges_uniformly_to(seq: GeomSequence, x, w, eps):
    """Least ``N`` with ``|x - x_n| <= eps w`` for all ``n > N``, or None."""
    x, w = Vec(x), Vec(w)
    eps = as_rational(eps)
    diff = seq.base - x
    if any(d != 0 for d in diff):
        return None
    if any(b != 0 and wi <= 0 for b, wi in zip(seq.drift, w)):
        return None
    return _least_index(seq.drift, w, eps, seq.ratio)
