"""Exact linear algebra over the rationals.

Matrices are sequences of rows; every entry is a Fraction. Everything here is
plain Gaussian elimination, sized for the handful of dimensions this package
works in.
"""

from fractions import Fraction

ZERO = Fraction(0)


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [v / piv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` for ``A`` given by ``rows`` (``ncols`` wide)."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs, ncols):
    """One solution of ``A x = b`` (free variables set to zero), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def matvec(rows, v):
    return tuple(sum((a * b for a, b in zip(r, v)), ZERO) for r in rows)


def matmul(a, b):
    bt = list(zip(*b)) if b else []
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), ZERO) for c in bt) for r in a)


def transpose(rows, ncols=None):
    if not rows:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(c) for c in zip(*rows))


class Subspace:
    """A linear subspace of Q^n held as the row space of an RREF basis."""

    __slots__ = ("dim_ambient", "basis", "_pivots")

    def __init__(self, vectors, n):
        self.dim_ambient = n
        red, piv = rref([tuple(v) for v in vectors], n)
        self.basis = tuple(tuple(r) for r in red)
        self._pivots = tuple(piv)

    @classmethod
    def coordinate(cls, coords, n):
        vs = []
        for i in sorted(coords):
            v = [ZERO] * n
            v[i] = Fraction(1)
            vs.append(v)
        return cls(vs, n)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        v = list(v)
        for row, pc in zip(self.basis, self._pivots):
            if v[pc] != 0:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        return all(a == 0 for a in v)

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other):
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim_ambient, self.basis))

    def __add__(self, other):
        return Subspace(self.basis + other.basis, self.dim_ambient)

    def annihilator(self):
        """Rows ``N`` with ``self = {x : N x = 0}``."""
        return nullspace(self.basis, self.dim_ambient)

    def intersection(self, other):
        n = self.dim_ambient
        cons = list(self.annihilator()) + list(other.annihilator())
        return Subspace(nullspace(cons, n), n)

    def image(self, matrix, m):
        return Subspace([matvec(matrix, b) for b in self.basis], m)

    def preimage(self, matrix, n):
        """``{x in Q^n : matrix x in self}``."""
        cons = [_row_times(a, matrix, n) for a in self.annihilator()]
        return Subspace(nullspace(cons, n), n)

    def support(self):
        return frozenset(i for b in self.basis for i, a in enumerate(b) if a != 0)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.dim_ambient})"


def _row_times(a, matrix, n):
    # a^T M as a length-n row
    out = [ZERO] * n
    for ai, row in zip(a, matrix):
        if ai != 0:
            for j in range(n):
                out[j] += ai * row[j]
    return tuple(out)

