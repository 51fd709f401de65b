"""Acceptance suite: the eight release criteria, one pass/fail line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
Under pytest the lines are printed in the terminal summary (see conftest.py).
"""
import sys
import time

from cycledeg import calculus
from cycledeg.calculus import degree, degree_routes, f_closed, f_recurrence, h_closed, h_combinatorial, q
from cycledeg.divisors import verify_relation_two
from cycledeg.lascoux import psi_halfsum, psi_llt
from cycledeg.matrices import (
    check_lowrank_contrapositive,
    sweep_block_rank,
    sweep_normal_form,
    sweep_reconstruct,
)
from cycledeg.paths import (
    all_nrj,
    binomial_product,
    count_two_colored,
    enumerate_P,
    enumerate_P_prime,
    MarkedPath,
    path_to_sequences,
    reflect_to_P,
    reflect_to_P_prime,
    sequence_pairs,
    sequences_to_path,
    two_colored_lhs,
    two_colored_rhs,
)
from cycledeg.schur import m_coefficient, m_coefficient_oracle
from cycledeg.verify import compositions

SEED = 20240
RESULTS: list[str] = []


def _line(number: int, title: str, ok: bool, elapsed: float, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    extra = f" ({detail})" if detail else ""
    line = f"[{status}] criterion {number}: {title} in {elapsed:.2f}s{extra}"
    RESULTS.append(line)
    if __name__ == "__main__":
        print(line, flush=True)


def _timed(fn):
    calculus.clear_caches()
    start = time.perf_counter()
    problems = fn()
    return problems, time.perf_counter() - start


def criterion_1():
    known = {3: 1, 4: 9, 5: 57, 6: 312, 7: 1578}
    problems = [n for n, v in known.items() if q(n) != v or degree(n) != v]
    for n in range(3, 10):
        routes = degree_routes(n)
        if set(routes.values()) != {q(n)} or len(routes) != 3:
            problems.append(("routes", n, routes))
    for n in range(3, 13):
        if f_closed(n, 0) != q(n):
            problems.append(("closed", n))
    return problems


def criterion_2():
    hand = {(4, 0): 10, (4, 1): 40, (5, 0): 35, (5, 1): 175, (5, 2): 600}
    problems = [c for c, v in hand.items() if h_combinatorial(*c) != v]
    for n in range(3, 10):
        for r in range(n - 2):
            if h_combinatorial(n, r) != h_closed(n, r):
                problems.append((n, r))
    return problems


def criterion_3():
    hand = {(4, 1): 16, (5, 1): 180, (5, 2): 280}
    problems = [c for c, v in hand.items() if f_recurrence(*c, h_source="combinatorial") != v]
    if f_recurrence(3, 0, h_source="combinatorial") != 1:
        problems.append("base case")
    for n in range(3, 10):
        for r in range(n - 2):
            if f_recurrence(n, r, h_source="combinatorial") != f_closed(n, r):
                problems.append((n, r))
    return problems


def criterion_4():
    problems = []
    if count_two_colored(4, 1) != 60:
        problems.append("(4,1)")
    for n in range(3, 9):
        for r in range(n - 2):
            c, lhs, rhs = count_two_colored(n, r), two_colored_lhs(n, r), two_colored_rhs(n, r)
            if not c == lhs == rhs:
                problems.append((n, r, c, lhs, rhs))
    return problems


def criterion_5():
    problems = []
    red = MarkedPath("URRUUURRR", (0, 3, 6, 7, 9), (1, 1, 2, 1, 0))
    if path_to_sequences(red) != ("010111000", "0110001011"):
        problems.append("example sequences")
    for n, r, j in all_nrj(8):
        size = binomial_product(n, r, j)
        P, Pp = enumerate_P(n, r, j), enumerate_P_prime(n, r, j)
        if not len(P) == len(Pp) == size:
            problems.append(("size", n, r, j))
        image = [reflect_to_P(p) for p in Pp]
        if set(image) != set(P) or len(set(image)) != len(Pp):
            problems.append(("reflection", n, r, j))
        if any(reflect_to_P_prime(p2, n, r, j) != p for p, p2 in zip(Pp, image)):
            problems.append(("reflection inverse", n, r, j))
        seqs = [path_to_sequences(p) for p in Pp]
        if any(sequences_to_path(*s) != p for p, s in zip(Pp, seqs)) or set(seqs) != set(sequence_pairs(n, r, j)):
            problems.append(("sequences", n, r, j))
    return problems


def criterion_6():
    problems = []
    for size in range(0, 13):
        for a in compositions(size, 6):
            for b2 in range(size // 2 + 1):
                b = (size - b2, b2)
                if m_coefficient(a, b) != m_coefficient_oracle(a, b):
                    problems.append((a, b))
    for b in range(1, 41):
        for a in range(b):
            if psi_halfsum(a, b) != psi_llt(a, b):
                problems.append(("psi", a, b))
    return problems


def criterion_7():
    return [(n, i) for n in range(3, 31) for i in range(0, n - 1) if not verify_relation_two(n, i)]


def criterion_8():
    problems = []
    for n in range(4, 9):
        for sweep in (sweep_block_rank, check_lowrank_contrapositive, sweep_normal_form, sweep_reconstruct):
            rep = sweep(n, 500, SEED)
            if rep.samples != 500 or rep.failures:
                problems.append((sweep.__name__, n, rep.failures[:3]))
    return problems


CRITERIA = [
    (1, "degree(n) = q(n), three routes for n <= 9, closed route for n <= 12", criterion_1, 10.0),
    (2, "combinatorial H equals closed H for 3 <= n <= 9", criterion_2, 60.0),
    (3, "recurrence F on combinatorial H equals closed F for 3 <= n <= 9", criterion_3, None),
    (4, "two-colored path count equals both sides for n <= 8", criterion_4, None),
    (5, "marked path families and their bijections for n <= 8", criterion_5, None),
    (6, "Pieri expansion equals tableau count, both psi formulas agree", criterion_6, None),
    (7, "divisor relation for 3 <= n <= 30", criterion_7, None),
    (8, "500-sample matrix sweeps for n = 4..8", criterion_8, 120.0),
]


def _check(number: int):
    _, title, fn, budget = CRITERIA[number - 1]
    problems, elapsed = _timed(fn)
    over = budget is not None and elapsed >= budget
    detail = f"{len(problems)} problem(s), first {problems[:2]}" if problems else ""
    if over:
        detail = (detail + "; " if detail else "") + f"over the {budget:.0f}s budget"
    ok = not problems and not over
    _line(number, title, ok, elapsed, detail)
    assert not problems, problems[:5]
    assert not over, f"took {elapsed:.1f}s, budget {budget}s"


def test_criterion_1_degree_values():
    _check(1)


def test_criterion_2_h_routes():
    _check(2)


def test_criterion_3_f_routes():
    _check(3)


def test_criterion_4_two_colored_paths():
    _check(4)


def test_criterion_5_marked_path_bijections():
    _check(5)


def test_criterion_6_schur_and_psi_oracles():
    _check(6)


def test_criterion_7_divisor_relation():
    _check(7)


def test_criterion_8_matrix_sweeps():
    _check(8)


if __name__ == "__main__":
    failed = 0
    for number, *_ in CRITERIA:
        try:
            _check(number)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
