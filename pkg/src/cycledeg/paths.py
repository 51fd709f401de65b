"""Lattice-path families and the bijections between them.

Paths live in N x N and use unit steps ``U`` (up) and ``R`` (right). A
:class:`MarkedPath` carries marked lattice points (stored as indices into
the sequence of visited points) and a non-negative integer on each mark.

Everything here is brute force: the enumerators walk every step word and
every marking, and are meant for small n only (cost is exponential in n).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import kernels
from .arith import binomial, factorial
from .graphs import CycleSubgraph, gap_composition

UP, RIGHT = "U", "R"
RED, BLUE = "red", "blue"

DEFAULT_ENUMERATION_CAP = 10


def _points(steps: str) -> list[tuple[int, int]]:
    x = y = 0
    pts = [(0, 0)]
    for s in steps:
        if s == UP:
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return pts


def _check_cap(n: int, cap: int | None):
    cap = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}; pass cap= to override")


# --------------------------------------------------------------------------
# two-colored paths


@dataclass(frozen=True)
class ColoredPath:
    steps: tuple[tuple[str, str], ...]

    def end(self) -> tuple[int, int]:
        return _points("".join(d for d, _ in self.steps))[-1]

    def count(self, direction: str | None = None, color: str | None = None) -> int:
        return sum(
            1 for d, c in self.steps if (direction is None or d == direction) and (color is None or c == color)
        )


def is_two_colored_member(p: ColoredPath, n: int, r: int) -> bool:
    """The four defining conditions of the two-colored family for (n, r)."""
    x, y = p.end()
    ends = {(n - 1 - r + t, n - 1 - t) for t in range(r + 1)}
    blue = n - r - 1
    return (
        (x, y) in ends
        and all(d in (UP, RIGHT) for d, _ in p.steps)
        and p.count(color=RED) == r
        and p.count(RIGHT, BLUE) == blue
        and p.count(UP, BLUE) == blue
    )


def iter_two_colored(n: int, r: int) -> Iterator[ColoredPath]:
    """Yield the two-colored paths for (n, r); exhaustive over all colored words."""
    length = 2 * n - 2 - r
    for dirs in range(1 << length):
        word = [RIGHT if dirs >> i & 1 else UP for i in range(length)]
        for reds in combinations(range(length), r):
            red = set(reds)
            p = ColoredPath(tuple((d, RED if i in red else BLUE) for i, d in enumerate(word)))
            if is_two_colored_member(p, n, r):
                yield p


def count_two_colored(n: int, r: int, cap: int | None = None) -> int:
    """Exhaustive count of the two-colored family (compiled kernel when available)."""
    if not 0 <= r <= n - 3:
        raise ValueError(f"need 0 <= r <= n - 3, got n={n}, r={r}")
    _check_cap(n, cap)
    return kernels.count_two_colored_paths(n, r)


def two_colored_lhs(n: int, r: int) -> int:
    """Sum over endpoints: sum_j C(2n-2-r, j) C(j, n-1-r) C(2n-2-r-j, n-1-r)."""
    m, s = 2 * n - 2 - r, n - 1 - r
    return sum(binomial(m, j) * binomial(j, s) * binomial(m - j, s) for j in range(s, n))


def two_colored_rhs(n: int, r: int) -> int:
    """(2n-2-r)! 2^r / ((n-r-1)!^2 r!)."""
    s = n - 1 - r
    num = factorial(2 * n - 2 - r) * 2**r
    den = factorial(s) ** 2 * factorial(r)
    if num % den:
        raise ArithmeticError("two-colored closed form is not integral")
    return num // den


# --------------------------------------------------------------------------
# marked paths


@dataclass(frozen=True)
class MarkedPath:
    steps: str
    marks: tuple[int, ...]
    assigned: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (UP, RIGHT) for s in self.steps):
            raise ValueError(f"steps must be U/R, got {self.steps!r}")
        if len(self.marks) != len(self.assigned):
            raise ValueError("one assigned number per mark")

    @classmethod
    def from_points(cls, points: Sequence[tuple[int, int]], marked: dict) -> MarkedPath:
        """Build from explicit lattice points and a ``{point: assigned}`` map."""
        steps = []
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if (x1 - x0, y1 - y0) == (0, 1):
                steps.append(UP)
            elif (x1 - x0, y1 - y0) == (1, 0):
                steps.append(RIGHT)
            else:
                raise ValueError(f"not a unit step: {(x0, y0)} -> {(x1, y1)}")
        idx = {p: i for i, p in enumerate(points)}
        marks = sorted(idx[p] for p in marked)
        return cls("".join(steps), tuple(marks), tuple(marked[points[i]] for i in marks))

    def points(self) -> list[tuple[int, int]]:
        return _points(self.steps)

    def end(self) -> tuple[int, int]:
        return self.points()[-1]

    def marked_points(self) -> dict[tuple[int, int], int]:
        pts = self.points()
        return {pts[i]: a for i, a in zip(self.marks, self.assigned)}

    def segments(self) -> list[str]:
        return [self.steps[a:b] for a, b in zip(self.marks, self.marks[1:])]

    def is_well_formed(self) -> bool:
        """Endpoints marked, ups-before-rights between marks, interior weights positive."""
        L = len(self.steps)
        m = self.marks
        if not m or m[0] != 0 or m[-1] != L or any(a >= b for a, b in zip(m, m[1:])):
            return False
        if any(x < 0 for x in self.assigned) or any(x <= 0 for x in self.assigned[1:-1]):
            return False
        return all("RU" not in seg for seg in self.segments())

    def weakly_below_diagonal(self) -> bool:
        return all(y <= x for x, y in self.points())

    def with_steps(self, steps: str) -> MarkedPath:
        return MarkedPath(steps, self.marks, self.assigned)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weightings of ``parts`` marks summing to ``total``; interior parts positive."""
    if parts == 1:
        yield (total,)
        return
    interior = parts - 2
    budget = total - interior
    if budget < 0:
        return
    # Stars and bars on the shifted values (all non-negative).
    for bars in combinations(range(budget + parts - 1), parts - 1):
        vals, prev = [], -1
        for b in bars:
            vals.append(b - prev - 1)
            prev = b
        vals.append(budget + parts - 2 - prev)
        yield tuple(v + (1 if 0 < i < parts - 1 else 0) for i, v in enumerate(vals))


def enumerate_marked(end_x: int, end_y: int, weight: int, below_diagonal: bool) -> list[MarkedPath]:
    """All marked, weighted up/right paths from (0,0) to (end_x, end_y)."""
    L = end_x + end_y
    out = []
    for ups in combinations(range(L), end_y):
        up = set(ups)
        steps = "".join(UP if i in up else RIGHT for i in range(L))
        if below_diagonal and not all(y <= x for x, y in _points(steps)):
            continue
        interior = range(1, L)
        for k in range(len(interior) + 1):
            for inner in combinations(interior, k):
                marks = (0,) + inner + ((L,) if L else ())
                if any("RU" in steps[a:b] for a, b in zip(marks, marks[1:])):
                    continue
                for w in _compositions(weight, len(marks)):
                    out.append(MarkedPath(steps, marks, w))
    return out


def _check_nrj(n: int, r: int, j: int):
    if not (0 <= r <= n - 3 and n - 1 - r <= j <= n - 1):
        raise ValueError(f"need 0 <= r <= n-3 and n-1-r <= j <= n-1, got n={n}, r={r}, j={j}")


def p_max_b2(n: int, r: int, j: int) -> int:
    """Largest admissible second-row length ``b2`` for the diagonal family."""
    return min(n - 1 - j, j - (n - 1 - r), r // 2)


def p_prime_end(n: int, r: int, j: int) -> tuple[int, int]:
    return (r - n + 1 + j, n - 1 - j)


def enumerate_P(n: int, r: int, j: int, cap: int | None = None) -> list[MarkedPath]:
    """Weighted marked paths weakly below the diagonal ending at (b1, b2), b1+b2 = r."""
    _check_nrj(n, r, j)
    _check_cap(n, cap)
    out = []
    for b2 in range(p_max_b2(n, r, j) + 1):
        out.extend(enumerate_marked(r - b2, b2, n - 1 - r, below_diagonal=True))
    return out


def enumerate_P_prime(n: int, r: int, j: int, cap: int | None = None) -> list[MarkedPath]:
    """Weighted marked paths ending at (r-n+1+j, n-1-j); the diagonal is ignored."""
    _check_nrj(n, r, j)
    _check_cap(n, cap)
    return enumerate_marked(*p_prime_end(n, r, j), n - 1 - r, below_diagonal=False)


def in_P(p: MarkedPath, n: int, r: int, j: int) -> bool:
    x, y = p.end()
    return (
        p.is_well_formed()
        and x + y == r
        and y <= p_max_b2(n, r, j)
        and p.weakly_below_diagonal()
        and sum(p.assigned) == n - 1 - r
    )


def in_P_prime(p: MarkedPath, n: int, r: int, j: int) -> bool:
    return p.is_well_formed() and p.end() == p_prime_end(n, r, j) and sum(p.assigned) == n - 1 - r


# --------------------------------------------------------------------------
# binary-sequence encoding


def path_to_sequences(p: MarkedPath) -> tuple[str, str]:
    """Encode a weighted marked path as the pair (U, R) of binary words.

    Walking the path, each mark writes as many zeros as its weight, and
    each up (resp. right) step writes a one into U (resp. R).
    """
    if not p.is_well_formed():
        raise ValueError(f"malformed marked path: {p}")
    weight = dict(zip(p.marks, p.assigned))
    U, R = [], []
    for i in range(len(p.steps) + 1):
        if i in weight:
            U.append("0" * weight[i])
            R.append("0" * weight[i])
        if i < len(p.steps):
            (U if p.steps[i] == UP else R).append("1")
    return "".join(U), "".join(R)


def sequences_to_path(U: str, R: str) -> MarkedPath:
    """Inverse of :func:`path_to_sequences`.

    Both words split at their zeros into the same number of blocks of ones,
    (u_1, ..., u_m) and (rho_1, ..., rho_m). Block i contributes u_i ups
    then rho_i rights and marks its end; each zero after a block adds one to
    the weight of the most recent mark. An empty block pair adds no mark.
    """
    if set(U) - {"0", "1"} or set(R) - {"0", "1"}:
        raise ValueError("sequences must be binary")
    if U.count("0") != R.count("0"):
        raise ValueError("U and R must contain the same number of zeros")
    ups = [len(b) for b in U.split("0")]
    rights = [len(b) for b in R.split("0")]
    steps = []
    marks, weights = [0], [0]
    for i, (u, rho) in enumerate(zip(ups, rights)):
        if u or rho:
            steps.append(UP * u + RIGHT * rho)
            marks.append(marks[-1] + u + rho)
            weights.append(0)
        if i < len(ups) - 1:
            weights[-1] += 1
    return MarkedPath("".join(steps), tuple(marks), tuple(weights))


def sequence_pairs(n: int, r: int, j: int) -> Iterator[tuple[str, str]]:
    """All admissible pairs: U with n-1-j ones, R with r-n+1+j ones, n-1-r zeros each."""
    _check_nrj(n, r, j)
    zeros = n - 1 - r
    x, y = p_prime_end(n, r, j)

    def words(ones: int) -> list[str]:
        L = ones + zeros
        return ["".join("1" if i in c else "0" for i in range(L)) for c in map(set, combinations(range(L), ones))]

    for u in words(y):
        for rho in words(x):
            yield u, rho


# --------------------------------------------------------------------------
# diagonal reflection


def reflect_to_P(p: MarkedPath) -> MarkedPath:
    """Flip up-steps into right-steps until the path is weakly below the diagonal.

    At each round the step arriving at the first point of maximal height
    ``y - x`` (which is an up step) is turned right; marks and weights stay.
    """
    steps = list(p.steps)
    while True:
        heights = [y - x for x, y in _points("".join(steps))]
        top = max(heights)
        if top <= 0:
            return p.with_steps("".join(steps))
        k = heights.index(top)
        if steps[k - 1] != UP:
            raise AssertionError("step into the first highest point must be an up step")
        steps[k - 1] = RIGHT


def reflect_to_P_prime(p: MarkedPath, n: int, r: int, j: int) -> MarkedPath:
    """Inverse of :func:`reflect_to_P` for the family indexed by (n, r, j).

    While the endpoint is short of row ``n-1-j``, the right step leaving the
    last point on the line ``y = x + level`` is turned up (level counts the
    flips made so far).
    """
    _check_nrj(n, r, j)
    target = n - 1 - j
    steps = list(p.steps)
    level = 0
    while _points("".join(steps))[-1][1] < target:
        pts = _points("".join(steps))
        k = max((i for i, (x, y) in enumerate(pts) if y - x == level), default=None)
        if k is None or k == len(steps):
            raise ValueError("path cannot be lifted to the target endpoint")
        if steps[k] != RIGHT:
            raise AssertionError("step leaving the last point on the line must be a right step")
        steps[k] = UP
        level += 1
    return p.with_steps("".join(steps))


# --------------------------------------------------------------------------
# tableau paths


def tableau_path(content: Sequence[int], row1: Sequence[int], row2: Sequence[int]) -> MarkedPath:
    """Path of a two-row filling: letter i gives (#i in row 2) ups then (#i in row 1) rights.

    Marks sit after each letter's block; weights are all zero.
    """
    steps, marks = [], [0]
    for letter, size in enumerate(content, start=1):
        up, right = list(row2).count(letter), list(row1).count(letter)
        if up + right != size:
            raise ValueError(f"letter {letter} appears {up + right} times, expected {size}")
        steps.append(UP * up + RIGHT * right)
        marks.append(marks[-1] + size)
    return MarkedPath("".join(steps), tuple(marks), (0,) * len(marks))


def count_m_paths(content: Sequence[int], b1: int, b2: int) -> int:
    """Paths to (b1, b2) weakly below the diagonal with marks after a_1, a_1+a_2, ... steps,
    going up then right between consecutive marks."""
    content = tuple(content)
    if sum(content) != b1 + b2:
        return 0

    def walk(i: int, x: int, y: int) -> int:
        if i == len(content):
            return int((x, y) == (b1, b2))
        total = 0
        for ups in range(content[i] + 1):
            rights = content[i] - ups
            # Ups come first, so the highest point of the segment is after them.
            if y + ups <= x:
                total += walk(i + 1, x + rights, y + ups)
        return total

    return walk(0, 0, 0)


def p_path_from_graph(g: CycleSubgraph, row1: Sequence[int], row2: Sequence[int]) -> MarkedPath:
    """Member of the diagonal family built from a graph and a filling of its run lengths.

    The filling's letter i must appear a_i times, a_i being the i-th run of
    ``g`` read along 1..n; the mark weights are the gaps of ``g``.
    """
    c, a = gap_composition(g)
    base = tableau_path(a, row1, row2)
    return MarkedPath(base.steps, base.marks, c)


def graph_row_sum(n: int, r: int, j: int, m_coefficient) -> int:
    """Sum over graphs avoiding (n,1) with r edges of M(gamma; b1, b2) over admissible b."""
    from .graphs import enumerate_prime, path_lengths

    _check_nrj(n, r, j)
    bound = min(n - 1 - j, j - (n - 1 - r))
    total = 0
    for g in enumerate_prime(n, r):
        gamma = path_lengths(g)
        for b2 in range(0, bound + 1):
            b1 = r - b2
            if b1 >= b2:
                total += m_coefficient(gamma, (b1, b2))
    return total


def binomial_product(n: int, r: int, j: int) -> int:
    s = n - 1 - r
    return binomial(j, s) * binomial(2 * n - 2 - r - j, s)


def admissible_j(n: int, r: int) -> range:
    return range(n - 1 - r, n)


def all_nrj(n_max: int, n_min: int = 3) -> Iterable[tuple[int, int, int]]:
    for n in range(n_min, n_max + 1):
        for r in range(0, n - 2):
            for j in admissible_j(n, r):
                yield n, r, j
