"""Two-row Schur polynomials in two variables.

Products of single-row Schur polynomials ``s_{a_1} ... s_{a_k}`` are expanded
with Pieri's rule; shapes with a third row vanish in two variables and are
dropped. ``M(a; b)`` is the coefficient of ``s_{b_1, b_2}`` in the product.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from . import kernels


@dataclass(frozen=True, order=True)
class TwoRowPartition:
    b1: int
    b2: int = 0

    def __post_init__(self):
        if not (self.b1 >= self.b2 >= 0):
            raise ValueError(f"need b1 >= b2 >= 0, got ({self.b1}, {self.b2})")

    @property
    def size(self) -> int:
        return self.b1 + self.b2

    def dimension(self) -> int:
        """Value of ``s_{b1,b2}(1, 1)``."""
        return self.b1 - self.b2 + 1

    def __iter__(self):
        return iter((self.b1, self.b2))


def _partition(p) -> TwoRowPartition:
    return p if isinstance(p, TwoRowPartition) else TwoRowPartition(*p)


class SchurCombination(Mapping):
    """Non-negative integer combination of two-row Schur polynomials of one degree."""

    __slots__ = ("_terms", "_size")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[TwoRowPartition, int] = {}
        for p, c in items:
            p = _partition(p)
            if c < 0:
                raise ValueError(f"negative coefficient {c} for {p}")
            if c:
                data[p] = data.get(p, 0) + c
        sizes = {p.size for p in data}
        if len(sizes) > 1:
            raise ValueError(f"mixed degrees in combination: {sorted(sizes)}")
        self._terms = dict(sorted(data.items()))
        self._size = sizes.pop() if sizes else None

    def __getitem__(self, p) -> int:
        return self._terms[_partition(p)]

    def get(self, p, default=0):
        return self._terms.get(_partition(p), default)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, SchurCombination):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == SchurCombination(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        body = ", ".join(f"({p.b1},{p.b2}): {c}" for p, c in self._terms.items())
        return f"SchurCombination({{{body}}})"

    @property
    def size(self):
        return self._size

    def times_row(self, a: int) -> SchurCombination:
        """Multiply by the single-row polynomial ``s_a``."""
        out: dict[TwoRowPartition, int] = {}
        for p, c in self._terms.items():
            for q in pieri_multiply(p, a):
                out[q] = out.get(q, 0) + c
        return SchurCombination(out)

    def evaluate_at_ones(self) -> int:
        return sum(c * p.dimension() for p, c in self._terms.items())


def pieri_multiply(p, a: int) -> SchurCombination:
    """``s_{b1,b2} * s_a`` in two variables: all ``(c1, c2)`` with c1 >= b1 >= c2 >= b2."""
    p = _partition(p)
    if a < 0:
        raise ValueError(f"row length must be non-negative, got {a}")
    total = p.size + a
    return SchurCombination(
        {TwoRowPartition(total - c2, c2): 1 for c2 in range(p.b2, min(p.b1, p.b2 + a) + 1)}
    )


@lru_cache(maxsize=None)
def _product(rows: tuple[int, ...]) -> SchurCombination:
    if not rows:
        return SchurCombination({TwoRowPartition(0, 0): 1})
    return _product(rows[:-1]).times_row(rows[-1])


def schur_product(a: Iterable[int]) -> SchurCombination:
    """Expansion of ``s_{a_1} ... s_{a_k}``; the empty product is ``s_{0,0}``."""
    a = tuple(a)
    if any(x <= 0 for x in a):
        raise ValueError(f"row lengths must be positive, got {list(a)}")
    # Schur products commute, so a canonical order shares the cache.
    return _product(tuple(sorted(a)))


def _check_sizes(a, b: TwoRowPartition):
    if any(x <= 0 for x in a):
        raise ValueError(f"row lengths must be positive, got {list(a)}")
    if sum(a) != b.size:
        raise ValueError(f"sum of rows {sum(a)} does not match |b| = {b.size}")


def m_coefficient(a: Iterable[int], b) -> int:
    """Coefficient of ``s_{b1,b2}`` in ``s_{a_1} ... s_{a_k}``, via iterated Pieri."""
    a, b = tuple(a), _partition(b)
    _check_sizes(a, b)
    return schur_product(a).get(b, 0)


def iter_fillings(a: Iterable[int], b) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Semistandard fillings of shape ``b`` where letter ``i`` (1-based) appears ``a_i`` times.

    Rows weakly increase, columns strictly increase. Fillings come out in
    lexicographic order of the reading word (first row, then second row).
    """
    a, b = tuple(a), _partition(b)
    _check_sizes(a, b)
    found = []
    for top in product(*(range(c + 1) for c in a)):
        if sum(top) != b.b1:
            continue
        row1 = tuple(i + 1 for i, c in enumerate(top) for _ in range(c))
        row2 = tuple(i + 1 for i, (c, t) in enumerate(zip(a, top)) for _ in range(c - t))
        if all(row2[col] > row1[col] for col in range(b.b2)):
            found.append((row1, row2))
    found.sort(key=lambda f: f[0] + f[1])
    return iter(found)


def m_coefficient_oracle(a: Iterable[int], b) -> int:
    """Brute-force tableau count of ``M(a; b)``, independent of Pieri's rule."""
    a, b = tuple(a), _partition(b)
    _check_sizes(a, b)
    return kernels.count_ssyt_two_row(a, b.b1, b.b2)
