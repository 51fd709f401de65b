"""The dihedral group of the n-cycle acting on vertices 1..n and edges 1..n.

Edge ``i`` joins vertices ``i`` and ``i+1`` (edge ``n`` joins ``n`` and ``1``).
An element is stored as (shift, reflect): first ``v -> n+1-v`` if reflecting,
then ``v -> v + shift`` modulo n. No permutation matrices are built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def _wrap(v: int, n: int) -> int:
    return (v - 1) % n + 1


def edge_index(u: int, v: int, n: int) -> int:
    """Index of the cycle edge joining vertices ``u`` and ``v``."""
    if _wrap(u + 1, n) == v:
        return u
    if _wrap(v + 1, n) == u:
        return v
    raise ValueError(f"vertices {u} and {v} are not adjacent in C_{n}")


@dataclass(frozen=True)
class Dihedral:
    n: int
    shift: int = 0
    reflect: bool = False

    def __post_init__(self):
        object.__setattr__(self, "shift", self.shift % self.n)

    def vertex(self, v: int) -> int:
        if self.reflect:
            v = self.n + 1 - v
        return _wrap(v + self.shift, self.n)

    def edge(self, i: int) -> int:
        return edge_index(self.vertex(i), self.vertex(_wrap(i + 1, self.n)), self.n)

    def compose(self, other: Dihedral) -> Dihedral:
        """``self`` after ``other``."""
        if self.reflect:
            shift, reflect = self.shift - other.shift, not other.reflect
        else:
            shift, reflect = self.shift + other.shift, other.reflect
        return Dihedral(self.n, shift, reflect)

    def inverse(self) -> Dihedral:
        if self.reflect:
            return self
        return Dihedral(self.n, -self.shift, False)

    def is_identity(self) -> bool:
        return self.shift == 0 and not self.reflect


def dihedral_group(n: int) -> Iterator[Dihedral]:
    for reflect in (False, True):
        for shift in range(n):
            yield Dihedral(n, shift, reflect)
