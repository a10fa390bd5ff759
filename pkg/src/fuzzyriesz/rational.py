"""Exact rational helpers and the ``"p/q"`` text encoding."""

from fractions import Fraction
from numbers import Rational

from .errors import InputError

HALF = Fraction(1, 2)
ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction without ever going through a float.

    Accepts ints, Fractions and strings such as ``"3/5"`` or ``"-2"``.
    Floats are rejected because the whole package branches on exact
    comparisons against 1/2.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"booleans are not rationals: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {value!r}") from exc
    raise InputError(f"expected an exact rational, got {type(value).__name__} {value!r}")


def fmt(q: Fraction) -> str:
    """Encode as ``"p/q"``; the denominator is always written."""
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def parse(s) -> Fraction:
    return as_rational(s)


def ceil_div(a: Fraction, b: Fraction) -> int:
    """Smallest integer n with n * b >= a, for b > 0."""
    q = a / b
    return -((-q.numerator) // q.denominator)
