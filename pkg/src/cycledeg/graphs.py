"""Spanning subgraphs of the n-cycle, optionally with labeled edges.

Edge ``i`` joins vertices ``i`` and ``i+1``; edge ``n`` joins ``n`` and ``1``.
A subgraph with fewer than ``n`` edges is a disjoint union of paths, and its
path-length multiset ``gamma`` drives the Schur-class computations.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .dihedral import Dihedral


@dataclass(frozen=True)
class CycleSubgraph:
    n: int
    edges: frozenset[int]

    def __init__(self, n: int, edges: Iterable[int] = ()):
        edges = frozenset(edges)
        if n < 3:
            raise ValueError(f"cycle length must be >= 3, got {n}")
        bad = [e for e in edges if not 1 <= e <= n]
        if bad:
            raise ValueError(f"edges out of range 1..{n}: {sorted(bad)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        return f"CycleSubgraph(n={self.n}, edges={sorted(self.edges)})"

    def act(self, g: Dihedral) -> CycleSubgraph:
        return CycleSubgraph(self.n, (g.edge(e) for e in self.edges))

    def rotate(self, shift: int) -> CycleSubgraph:
        return self.act(Dihedral(self.n, shift))

    def in_prime(self) -> bool:
        """True when the edge (n, 1) is absent."""
        return self.n not in self.edges


def path_lengths(g: CycleSubgraph) -> list[int]:
    """Sorted lengths of the maximal paths of ``g`` (its ``gamma``)."""
    n = g.n
    if len(g.edges) >= n:
        raise ValueError("the full cycle is not a union of paths")
    # Start scanning just after a missing edge so no run wraps around.
    start = next(e for e in range(n, 0, -1) if e not in g.edges)
    lengths, run = [], 0
    for k in range(1, n + 1):
        e = (start + k - 1) % n + 1
        if e in g.edges:
            run += 1
        elif run:
            lengths.append(run)
            run = 0
    if run:
        lengths.append(run)
    return sorted(lengths)


def gap_composition(g: CycleSubgraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Read a graph without edge (n, 1) along the path 1..n.

    Returns ``(c, a)``: ``a_1, ..., a_k`` are the lengths of the runs of
    present edges in order, and ``c_1, ..., c_{k+1}`` count the missing edges
    in the gaps around them (outer gaps may be empty). ``c_1 + ... + c_{k+1} = n - 1 - |E|``.
    """
    if not g.in_prime():
        raise ValueError("graph contains the edge (n, 1)")
    c, a = [], []
    gap = run = 0
    for e in range(1, g.n):
        if e in g.edges:
            if run == 0:
                c.append(gap)
                gap = 0
            run += 1
        else:
            if run:
                a.append(run)
                run = 0
            gap += 1
    if run:
        a.append(run)
    c.append(gap)
    return tuple(c), tuple(a)


def graph_from_gaps(n: int, c: Iterable[int], a: Iterable[int]) -> CycleSubgraph:
    """Inverse of :func:`gap_composition`."""
    c, a = list(c), list(a)
    if len(c) != len(a) + 1 or any(x <= 0 for x in a) or any(x <= 0 for x in c[1:-1]):
        raise ValueError("need k positive runs separated by k-1 positive gaps")
    if sum(c) + sum(a) != n - 1:
        raise ValueError("gaps and runs must fill the path 1..n-1")
    edges, pos = [], 1
    for gap, run in zip(c, a + [0]):
        pos += gap
        edges.extend(range(pos, pos + run))
        pos += run
    return CycleSubgraph(n, edges)


@dataclass(frozen=True)
class LabeledSubgraph:
    """A subgraph with a bijective labeling; ``labels[i-1]`` is the edge labeled ``i``."""

    base: CycleSubgraph
    labels: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.labels) != sorted(self.base.edges) or len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be a bijection onto the edge set")

    @property
    def r(self) -> int:
        return len(self.labels)

    def edge_with_label(self, i: int) -> int:
        return self.labels[i - 1]

    def path_lengths(self) -> list[int]:
        return path_lengths(self.base)


def enumerate_subgraphs(n: int, r: int) -> list[CycleSubgraph]:
    """All r-edge spanning subgraphs of C_n."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}")
    return [CycleSubgraph(n, c) for c in combinations(range(1, n + 1), r)]


def enumerate_prime(n: int, r: int) -> list[CycleSubgraph]:
    """All r-edge subgraphs avoiding the edge (n, 1); there are C(n-1, r)."""
    if not 0 <= r <= n - 1:
        raise ValueError(f"need 0 <= r <= n - 1, got r={r}")
    return [CycleSubgraph(n, c) for c in combinations(range(1, n), r)]


def iter_labeled(n: int, r: int) -> Iterator[LabeledSubgraph]:
    if not 0 <= r <= n - 3:
        raise ValueError(f"labeled enumeration needs 0 <= r <= n - 3, got n={n}, r={r}")
    for labels in permutations(range(1, n + 1), r):
        yield LabeledSubgraph(CycleSubgraph(n, labels), labels)


def enumerate_labeled(n: int, r: int) -> list[LabeledSubgraph]:
    """All r-edge subgraphs with edges labeled 1..r; there are n!/(n-r)!."""
    return list(iter_labeled(n, r))


def rotations_into_prime(g: CycleSubgraph) -> int:
    """Number of rotations carrying ``g`` to a graph without the edge (n, 1)."""
    return sum(1 for s in range(g.n) if g.rotate(s).in_prime())
