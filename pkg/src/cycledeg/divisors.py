"""Divisor classes on the space of complete quadrics, in the hyperplane basis.

A class is stored by its coordinates in ``L_1, ..., L_{n-1}``. The
exceptional classes ``S_i`` are only reached through :func:`s_in_l_basis`,
``S_i = -L_{i-1} + 2 L_i - L_{i+1}`` with ``L_0 = L_n = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import inverse, matmul


@dataclass(frozen=True)
class DivisorClass:
    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"matrix size must be >= 3, got {self.n}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n: int) -> DivisorClass:
        return cls(n, (0,) * (n - 1))

    @classmethod
    def L(cls, n: int, i: int) -> DivisorClass:
        """The hyperplane class ``L_i``; ``L_0`` and ``L_n`` are zero."""
        if not 0 <= i <= n:
            raise ValueError(f"L index must lie in 0..{n}, got {i}")
        coeffs = [0] * (n - 1)
        if 1 <= i <= n - 1:
            coeffs[i - 1] = 1
        return cls(n, tuple(coeffs))

    def _check(self, other: DivisorClass):
        if not isinstance(other, DivisorClass) or other.n != self.n:
            raise TypeError("divisor classes live on different spaces")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.n, tuple(-a for a in self.coeffs))

    def scale(self, c) -> DivisorClass:
        c = Fraction(c)
        return DivisorClass(self.n, tuple(c * a for a in self.coeffs))

    __rmul__ = scale


def s_in_l_basis(n: int, i: int) -> DivisorClass:
    """Coordinates of ``S_i`` in the L-basis."""
    if n < 3:
        raise ValueError(f"matrix size must be >= 3, got {n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"S index must lie in 1..{n - 1}, got {i}")
    return DivisorClass.L(n, i).scale(2) - DivisorClass.L(n, i - 1) - DivisorClass.L(n, i + 1)


def s_to_l_matrix(n: int) -> list[list[Fraction]]:
    """Matrix whose column ``i`` holds ``S_{i+1}`` in L-coordinates."""
    cols = [s_in_l_basis(n, i).coeffs for i in range(1, n)]
    return [[cols[j][i] for j in range(n - 1)] for i in range(n - 1)]


def l_to_s_matrix(n: int) -> list[list[Fraction]]:
    return inverse(s_to_l_matrix(n))


def to_s_basis(d: DivisorClass) -> tuple[Fraction, ...]:
    """Coordinates of ``d`` in the S-basis."""
    col = [[c] for c in d.coeffs]
    return tuple(row[0] for row in matmul(l_to_s_matrix(d.n), col))


def from_s_basis(n: int, coeffs) -> DivisorClass:
    total = DivisorClass.zero(n)
    for i, c in enumerate(coeffs, start=1):
        total = total + s_in_l_basis(n, i).scale(c)
    return total


def l_last_in_s_basis(n: int) -> tuple[Fraction, ...]:
    """``L_{n-1} = (S_1 + 2 S_2 + ... + (n-1) S_{n-1}) / n``, as S-coordinates."""
    if n < 3:
        raise ValueError(f"matrix size must be >= 3, got {n}")
    return tuple(Fraction(i, n) for i in range(1, n))


def relation_two_rhs(n: int, i: int) -> DivisorClass:
    """``(L_i + S_{i+1} + 2 S_{i+2} + ... + (n-i-1) S_{n-1}) / (n - i)``."""
    if n < 3 or not 0 <= i <= n - 2:
        raise ValueError(f"need n >= 3 and 0 <= i <= n - 2, got n={n}, i={i}")
    total = DivisorClass.L(n, i)
    for j in range(1, n - i):
        total = total + s_in_l_basis(n, i + j).scale(j)
    return total.scale(Fraction(1, n - i))


def verify_relation_two(n: int, i: int) -> bool:
    return relation_two_rhs(n, i) == DivisorClass.L(n, n - 1)
