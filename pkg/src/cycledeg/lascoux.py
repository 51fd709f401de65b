"""Lascoux coefficients for two-element index sets.

Two binomial expressions are implemented and must agree; their equality is
a telescoping of Pascal's rule.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import binomial, exact_int


def _check_index(a: int, b: int):
    if not 0 <= a < b:
        raise ValueError(f"psi index needs 0 <= a < b, got ({a}, {b})")


def psi_halfsum(a: int, b: int) -> int:
    """``psi_{a,b} = (1/2) * sum_{k=a+1}^{b} C(a+b+1, k)``."""
    _check_index(a, b)
    s = sum(binomial(a + b + 1, k) for k in range(a + 1, b + 1))
    return exact_int(Fraction(s, 2), f"psi_halfsum({a},{b})")


def psi_llt(a: int, b: int) -> int:
    """``psi_{a,b} = C(a+b,a)/2 + C(a+b,a+1) + ... + C(a+b,b-1) + C(a+b,b)/2``."""
    _check_index(a, b)
    m = a + b
    s = Fraction(binomial(m, a), 2) + Fraction(binomial(m, b), 2)
    s += sum(binomial(m, k) for k in range(a + 1, b))
    return exact_int(s, f"psi_llt({a},{b})")


def psi(a: int, b: int) -> int:
    return psi_halfsum(a, b)


if __debug__:
    for _b in range(1, 13):
        for _a in range(_b):
            assert psi_halfsum(_a, _b) == psi_llt(_a, _b), (_a, _b)
    del _a, _b
