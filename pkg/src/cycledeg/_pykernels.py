"""Pure-Python brute-force counting kernels.

These are the reference implementations; ``_ckernels.pyx`` mirrors them
loop for loop and the two are compared in the test suite.
"""
from __future__ import annotations

from itertools import combinations, product


def count_two_colored_paths(n: int, r: int) -> int:
    """Count two-colored up/right paths of length 2n-2-r by exhaustion.

    Every direction word (bit set = right step) is tried against every
    choice of ``r`` red steps; a pair is kept when the endpoint lies on the
    anti-diagonal segment from (n-1-r, n-1) to (n-1, n-1-r) and exactly
    n-r-1 blue steps go right and n-r-1 go up.
    """
    length = 2 * n - 2 - r
    blue = n - r - 1
    if r < 0 or blue < 0:
        return 0
    full = (1 << length) - 1
    red_masks = [sum(1 << i for i in c) for c in combinations(range(length), r)]
    total = 0
    for d in range(1 << length):
        rights = d.bit_count()
        if not (n - 1 - r <= rights <= n - 1):
            continue
        up = full & ~d
        for red in red_masks:
            if (d & ~red).bit_count() == blue and (up & ~red).bit_count() == blue:
                total += 1
    return total


def count_ssyt_two_row(content, b1: int, b2: int) -> int:
    """Number of semistandard fillings of shape (b1, b2) with the given content.

    Each choice of how many copies of each letter sit in the first row fixes
    both (weakly increasing) rows; the column-strict condition is then
    checked directly.
    """
    content = tuple(content)
    if sum(content) != b1 + b2 or b1 < b2 or b2 < 0:
        return 0
    total = 0
    for top in product(*(range(c + 1) for c in content)):
        if sum(top) != b1:
            continue
        row1 = [i for i, c in enumerate(top) for _ in range(c)]
        row2 = [i for i, (c, t) in enumerate(zip(content, top)) for _ in range(c - t)]
        if all(row2[col] > row1[col] for col in range(b2)):
            total += 1
    return total
