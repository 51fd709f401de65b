"""Intersection numbers F(n, r), H(n, r) and the degree of the inverse cycle variety.

F and H vanish outside ``0 <= r <= n - 3``. Each quantity has a closed form
and an independent route: H by summing Schur coefficients over labeled
graphs, F by the recurrence in which H enters.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .arith import binomial, exact_int, factorial
from .errors import RouteDisagreement
from .graphs import iter_labeled, path_lengths
from .lascoux import psi
from .paths import two_colored_lhs, two_colored_rhs
from .schur import m_coefficient

ROUTES = ("closed", "recurrence", "combinatorial")


def _in_range(n: int, r: int) -> bool:
    return n >= 3 and 0 <= r <= n - 3


def q(n: int) -> int:
    """(n+2)/4 * C(2n, n) - 3 * 2^(2n-3)."""
    if n < 2:
        raise ValueError(f"q(n) needs n >= 2, got {n}")
    return exact_int(Fraction(n + 2, 4) * binomial(2 * n, n) - 3 * Fraction(2) ** (2 * n - 3), f"q({n})")


def h_closed(n: int, r: int) -> int:
    """(2n-r-2)! n 2^(r-1) / ((n-r)! (n-r-1)!), zero outside 0 <= r <= n-3."""
    if not _in_range(n, r):
        return 0
    value = Fraction(factorial(2 * n - r - 2) * n) * Fraction(2) ** (r - 1)
    return exact_int(value / (factorial(n - r) * factorial(n - r - 1)), f"H({n},{r})")


def _h_weight(gamma: tuple[int, ...], n: int, r: int) -> int:
    total = 0
    for b2 in range(r // 2 + 1):
        b1 = r - b2
        if b1 > n - 2:
            continue
        m = m_coefficient(gamma, (b1, b2))
        if m:
            total += m * psi(n - 2 - b1, n - 1 - b2)
    return total


def h_combinatorial(n: int, r: int) -> int:
    """Sum over edge-labeled r-subgraphs of sum_b M(gamma; b) psi_{n-2-b1, n-1-b2}."""
    if not _in_range(n, r):
        return 0
    weights: dict[tuple[int, ...], int] = {}
    gammas: dict[frozenset, tuple[int, ...]] = {}
    total = 0
    for g in iter_labeled(n, r):
        gamma = gammas.get(g.base.edges)
        if gamma is None:
            gamma = gammas[g.base.edges] = tuple(path_lengths(g.base))
        w = weights.get(gamma)
        if w is None:
            w = weights[gamma] = _h_weight(gamma, n, r)
        total += w
    return total


def f_closed(n: int, r: int) -> int:
    """q(n-r) 2^(r+1) n (2n-r-1)! / (2n-2r)!, zero outside 0 <= r <= n-3."""
    if not _in_range(n, r):
        return 0
    value = Fraction(q(n - r) * 2 ** (r + 1) * n * factorial(2 * n - r - 1), factorial(2 * n - 2 * r))
    return exact_int(value, f"F({n},{r})")


H_SOURCES: dict[str, Callable[[int, int], int]] = {
    "combinatorial": h_combinatorial,
    "closed": h_closed,
}


@lru_cache(maxsize=None)
def _h_cached(n: int, r: int, source: str) -> int:
    return H_SOURCES[source](n, r)


@lru_cache(maxsize=None)
def _f_rec(n: int, r: int, source: str) -> Fraction:
    if not _in_range(n, r):
        return Fraction(0)
    if n == 3:
        # L(C_3) is all of the 3x3 symmetric matrices, a linear space of degree 1.
        return Fraction(1)
    value = (
        Fraction(2 * n * r, n - 1) * _f_rec(n - 1, r - 1, source)
        + _f_rec(n, r + 1, source) / (n - r)
        + Fraction(n - r - 2, n - r) * _h_cached(n, r, source)
    )
    exact_int(value, f"F({n},{r}) by recurrence")
    return value


def f_recurrence(n: int, r: int, h_source: str = "combinatorial") -> int:
    """F(n, r) from the recurrence in n and r with base F(3, 0) = 1.

    By default H comes from :func:`h_combinatorial`, so this route touches
    neither closed form.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if h_source not in H_SOURCES:
        raise ValueError(f"unknown H source {h_source!r}")
    if not 0 <= r <= n - 3:
        return 0
    # Fill r descending so recursion depth stays about n.
    for n2 in range(3, n + 1):
        for r2 in range(n2 - 3, -1, -1):
            _f_rec(n2, r2, h_source)
    return exact_int(_f_rec(n, r, h_source), f"F({n},{r})")


def degree_routes(n: int, routes=ROUTES) -> dict[str, int]:
    """F(n, 0) by each requested route.

    ``closed`` is the closed form of F, ``recurrence`` runs the recurrence
    on closed-form H, ``combinatorial`` runs it on the labeled-graph sum.
    """
    if n < 3:
        raise ValueError(f"degree needs n >= 3, got {n}")
    out = {}
    for route in routes:
        if route == "closed":
            out[route] = f_closed(n, 0)
        elif route == "recurrence":
            out[route] = f_recurrence(n, 0, h_source="closed")
        elif route == "combinatorial":
            out[route] = f_recurrence(n, 0, h_source="combinatorial")
        else:
            raise ValueError(f"unknown route {route!r}")
    return out


def degree(n: int, routes=ROUTES) -> int:
    """The degree F(n, 0), checked against q(n) and across every route."""
    values = {"q": q(n), **degree_routes(n, routes)}
    if len(set(values.values())) != 1:
        raise RouteDisagreement({"n": n, "r": 0}, values)
    return values["q"]


def check_two_colored_identity(n: int, r: int) -> bool:
    return two_colored_lhs(n, r) == two_colored_rhs(n, r)


def clear_caches():
    _h_cached.cache_clear()
    _f_rec.cache_clear()
