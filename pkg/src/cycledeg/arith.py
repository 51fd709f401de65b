"""Exact integer and rational primitives.

Everything here is exact: integers are Python ints and rationals are
:class:`fractions.Fraction`, which keeps ``gcd(num, den) == 1`` and ``den > 0``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .errors import IntegralityError

__all__ = [
    "Fraction",
    "as_fraction",
    "binomial",
    "exact_int",
    "factorial",
    "falling_factorial",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); the empty product is 1."""
    if k < 0:
        raise ValueError(f"falling_factorial needs k >= 0, got {k}")
    return math.perm(n, k) if n >= 0 else math.prod(range(n, n - k, -1))


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction. Floats are refused."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; pass an int, Fraction or 'p/q'")
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def exact_int(x, what: str = "value") -> int:
    """Return ``x`` as an int, raising :class:`IntegralityError` if it is not integral."""
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {x}")
    return x.numerator
