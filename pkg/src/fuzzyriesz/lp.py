"""Exact linear feasibility and lexicographic minimization.

Variables are eliminated one at a time: through an equality when one
mentions the variable (plain substitution), otherwise by Fourier-Motzkin
pairing of its lower and upper bounds. Every derived constraint remembers
the multipliers of the original constraints it came from, so a
contradiction ``0 <= b < 0`` comes with a certificate.

Sizes here are a handful of variables; no attempt is made to control the
quadratic growth of Fourier-Motzkin beyond removing duplicates.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InfeasibleError, InputError, UnboundedError
from .rational import ZERO, as_rational


@dataclass
class _Con:
    a: tuple
    b: Fraction
    eq: bool
    origin: dict

    def scaled(self, s):
        return _Con(tuple(s * v for v in self.a), s * self.b, self.eq,
                    {k: s * v for k, v in self.origin.items()})


def _combine(c1, s1, c2, s2, eq):
    a = tuple(s1 * u + s2 * v for u, v in zip(c1.a, c2.a))
    origin = {k: s1 * v for k, v in c1.origin.items()}
    for k, v in c2.origin.items():
        origin[k] = origin.get(k, ZERO) + s2 * v
    return _Con(a, s1 * c1.b + s2 * c2.b, eq, {k: v for k, v in origin.items() if v != 0})


@dataclass
class LinearFeasibilityProblem:
    """Constraints ``a . x <= b`` and ``a . x == b`` over ``nvars`` rationals."""

    nvars: int
    eqs: list = field(default_factory=list)
    ineqs: list = field(default_factory=list)

    def _row(self, a):
        a = tuple(as_rational(v) for v in a)
        if len(a) != self.nvars:
            raise InputError(f"constraint has {len(a)} coefficients, expected {self.nvars}")
        return a

    def add_eq(self, a, b):
        self.eqs.append((self._row(a), as_rational(b)))

    def add_le(self, a, b):
        self.ineqs.append((self._row(a), as_rational(b)))

    def add_ge(self, a, b):
        a = self._row(a)
        self.ineqs.append((tuple(-v for v in a), -as_rational(b)))

    def bound(self, i, lo=None, hi=None):
        e = [ZERO] * self.nvars
        e[i] = Fraction(1)
        if lo is not None:
            self.add_ge(e, lo)
        if hi is not None:
            self.add_le(e, hi)

    def constraints(self):
        out = []
        for k, (a, b) in enumerate(self.ineqs):
            out.append(_Con(a, b, False, {("le", k): Fraction(1)}))
        for k, (a, b) in enumerate(self.eqs):
            out.append(_Con(a, b, True, {("eq", k): Fraction(1)}))
        return out

    def satisfied_by(self, x):
        x = [as_rational(v) for v in x]
        dot = lambda a: sum((u * v for u, v in zip(a, x)), ZERO)  # noqa: E731
        return (all(dot(a) <= b for a, b in self.ineqs)
                and all(dot(a) == b for a, b in self.eqs))


def _check_trivial(c):
    if any(v != 0 for v in c.a):
        return False
    if (c.eq and c.b != 0) or (not c.eq and c.b < 0):
        raise InfeasibleError("constraints are inconsistent", c.origin)
    return True


def _normalize(cons):
    # drop trivial rows, scale, and keep the tightest copy of each inequality
    eqs, best = [], {}
    for c in cons:
        if _check_trivial(c):
            continue
        lead = next(v for v in c.a if v != 0)
        s = 1 / abs(lead)
        c = c.scaled(s) if s != 1 else c
        if c.eq:
            eqs.append(c)
        else:
            cur = best.get(c.a)
            if cur is None or c.b < cur.b:
                best[c.a] = c
    return eqs + list(best.values())


def _eliminate(cons, v):
    eqs = [c for c in cons if c.eq and c.a[v] != 0]
    if eqs:
        piv = eqs[0]
        out = []
        for c in cons:
            if c is piv:
                continue
            if c.a[v] == 0:
                out.append(c)
            else:
                out.append(_combine(c, Fraction(1), piv, -c.a[v] / piv.a[v], c.eq))
        return _normalize(out)
    lower, upper, rest = [], [], []
    for c in cons:
        if c.a[v] > 0:
            upper.append(c)
        elif c.a[v] < 0:
            lower.append(c)
        else:
            rest.append(c)
    for lo in lower:
        for up in upper:
            rest.append(_combine(lo, up.a[v], up, -lo.a[v], False))
    return _normalize(rest)


def _value_range(cons, v, fixed):
    """Feasible interval for ``x_v`` once the variables in ``fixed`` are set."""
    lo, hi, pinned = None, None, None
    for c in cons:
        rhs = c.b - sum((c.a[j] * fixed[j] for j in fixed if c.a[j] != 0), ZERO)
        coef = c.a[v]
        if coef == 0:
            continue
        val = rhs / coef
        if c.eq:
            pinned = val
        elif coef > 0:
            hi = val if hi is None else min(hi, val)
        else:
            lo = val if lo is None else max(lo, val)
    return lo, hi, pinned


def lexmin(problem: LinearFeasibilityProblem, order=None):
    """Lexicographically smallest feasible point (priority given by ``order``).

    Raises :class:`InfeasibleError` with a certificate when the constraint
    set is empty, and :class:`UnboundedError` when some variable, with the
    earlier ones fixed, has no lower bound.
    """
    n = problem.nvars
    order = list(range(n)) if order is None else list(order)
    systems = {n: _normalize(problem.constraints())}
    for k in range(n - 1, -1, -1):
        systems[k] = _eliminate(systems[k + 1], order[k])
    fixed = {}
    for k in range(n):
        v = order[k]
        lo, hi, pinned = _value_range(systems[k + 1], v, fixed)
        if pinned is not None:
            val = pinned
        elif lo is None:
            raise UnboundedError(f"variable {v} is unbounded below")
        else:
            val = lo
        if (lo is not None and val < lo) or (hi is not None and val > hi):
            raise InfeasibleError(f"back-substitution failed at variable {v}")  # pragma: no cover
        fixed[v] = val
    x = tuple(fixed[i] for i in range(n))
    if not problem.satisfied_by(x):
        raise AssertionError("lexmin produced an infeasible point")  # pragma: no cover
    return x


def feasible(problem: LinearFeasibilityProblem) -> bool:
    try:
        systems = _normalize(problem.constraints())
        for v in range(problem.nvars):
            systems = _eliminate(systems, v)
    except InfeasibleError:
        return False
    return True


def minimize(problem: LinearFeasibilityProblem, objective):
    """Minimum of ``objective . x`` and a minimizing point.

    Returns ``(value, point)``; ``value`` is None when unbounded below.
    The point is the lexicographically smallest minimizer, or None if that
    is not attained in the remaining variables.
    """
    c = tuple(as_rational(v) for v in objective)
    n = problem.nvars
    aug = LinearFeasibilityProblem(n + 1)
    for a, b in problem.eqs:
        aug.add_eq(a + (ZERO,), b)
    for a, b in problem.ineqs:
        aug.add_le(a + (ZERO,), b)
    aug.add_eq(tuple(-v for v in c) + (Fraction(1),), ZERO)
    order = [n] + list(range(n))
    try:
        pt = lexmin(aug, order)
    except UnboundedError:
        # distinguish "objective unbounded" from "minimizer not lexmin-attainable"
        systems = _normalize(aug.constraints())
        for v in range(n):
            systems = _eliminate(systems, v)
        lo, _, pinned = _value_range(systems, n, {})
        if pinned is not None:
            return pinned, None
        return lo, None
    return pt[n], pt[:n]
