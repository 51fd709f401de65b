"""Verification suites. Each suite is a list of independent cells.

A cell is ``(kind, kwargs)``; :func:`run_cell` evaluates one and returns a
list of report records. Cells are picklable so a process pool can run them,
and results are always merged in cell order.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import calculus as deg
from . import matrices as mx
from . import paths
from .divisors import verify_relation_two
from .lascoux import psi_halfsum, psi_llt
from .report import FAIL, PASS, record
from .schur import m_coefficient, m_coefficient_oracle, schur_product

SUITES = (
    "path-identity",
    "schur-rows",
    "psi",
    "pieri-oracle",
    "bijection",
    "divisors",
    "blocks",
    "lowrank",
    "reconstruct",
)
ENUMERATION_SUITES = {"path-identity", "schur-rows", "pieri-oracle", "bijection", "blocks", "lowrank", "reconstruct"}

PSI_BOUND = 40
PIERI_SIZE = 12
PIERI_PARTS = 6


def compositions(total: int, max_parts: int):
    """Ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first, max_parts - 1):
            yield (first,) + rest


# --------------------------------------------------------------------------
# cell bodies


def _cell_two_colored(n: int, r: int, cap: int):
    count = paths.count_two_colored(n, r, cap=cap)
    lhs, rhs = paths.two_colored_lhs(n, r), paths.two_colored_rhs(n, r)
    inputs = {"n": n, "r": r}
    return [
        record("two-colored-count", inputs, rhs, count),
        record("two-colored-lhs", inputs, rhs, lhs),
    ]


def _cell_schur_rows(n: int, r: int, j: int):
    expected = paths.binomial_product(n, r, j)
    actual = paths.graph_row_sum(n, r, j, m_coefficient)
    return [record("graph-row-sum", {"n": n, "r": r, "j": j}, expected, actual)]


def _cell_pieri(size: int, max_parts: int):
    recs = []
    bad = []
    checked = 0
    for a in compositions(size, max_parts):
        expansion = schur_product(a)
        lhs = 1
        for x in a:
            lhs *= x + 1
        if expansion.evaluate_at_ones() != lhs:
            bad.append(("ones", list(a)))
        for b2 in range(size // 2 + 1):
            b = (size - b2, b2)
            checked += 1
            if m_coefficient(a, b) != m_coefficient_oracle(a, b):
                bad.append(("oracle", list(a), list(b)))
    status = PASS if not bad else FAIL
    recs.append(record("pieri-vs-tableaux", {"size": size, "max_parts": max_parts}, checked, checked - len(bad), status))
    if bad:
        recs.append(record("pieri-mismatches", {"size": size}, [], bad[:20], FAIL))
    return recs


def _cell_psi(b: int):
    bad = [a for a in range(b) if psi_halfsum(a, b) != psi_llt(a, b)]
    return [record("psi-formulas", {"b": b}, 0, len(bad))]


def _cell_bijection(n: int, r: int, j: int, cap: int):
    inputs = {"n": n, "r": r, "j": j}
    expected = paths.binomial_product(n, r, j)
    P = paths.enumerate_P(n, r, j, cap=cap)
    Pp = paths.enumerate_P_prime(n, r, j, cap=cap)
    image = [paths.reflect_to_P(p) for p in Pp]
    reflect_ok = set(image) == set(P) and len(set(image)) == len(Pp) and all(
        paths.reflect_to_P_prime(q, n, r, j) == p for p, q in zip(Pp, image)
    )
    seq = [paths.path_to_sequences(p) for p in Pp]
    encode_ok = (
        all(paths.sequences_to_path(u, v) == p for p, (u, v) in zip(Pp, seq))
        and set(seq) == set(paths.sequence_pairs(n, r, j))
    )
    return [
        record("size-P", inputs, expected, len(P)),
        record("size-P-prime", inputs, expected, len(Pp)),
        record("reflection-bijective", inputs, True, reflect_ok),
        record("sequence-round-trip", inputs, True, encode_ok),
    ]


def _cell_divisors(n: int):
    recs = []
    for i in range(0, n - 1):
        ok = verify_relation_two(n, i)
        recs.append(record("relation-two", {"n": n, "i": i}, True, ok))
    return recs


def _sweep_record(name: str, rep: mx.SweepReport):
    inputs = {"n": rep.n, "samples": rep.samples, "seed": rep.seed}
    recs = [record(name, inputs, 0, len(rep.failures))]
    if rep.failures:
        recs[0]["actual"] = {"failures": len(rep.failures), "first": [list(f) for f in rep.failures[:5]]}
        recs[0]["status"] = FAIL
    return recs


def _cell_blocks(n: int, samples: int, seed: int):
    return _sweep_record("block-rank", mx.sweep_block_rank(n, samples, seed)) + _sweep_record(
        "block-normal-form", mx.sweep_normal_form(n, samples, seed)
    )


def _cell_lowrank(n: int, samples: int, seed: int):
    return _sweep_record("lowrank-contrapositive", mx.check_lowrank_contrapositive(n, samples, seed))


def _cell_reconstruct(n: int, samples: int, seed: int):
    return _sweep_record("reconstruct-from-image", mx.sweep_reconstruct(n, samples, seed))


_CELLS = {
    "two-colored": _cell_two_colored,
    "schur-rows": _cell_schur_rows,
    "pieri": _cell_pieri,
    "psi": _cell_psi,
    "bijection": _cell_bijection,
    "divisors": _cell_divisors,
    "blocks": _cell_blocks,
    "lowrank": _cell_lowrank,
    "reconstruct": _cell_reconstruct,
}


def run_cell(cell) -> list[dict]:
    kind, kwargs = cell
    try:
        return _CELLS[kind](**kwargs)
    except Exception as exc:  # a crash in a cell is a failed check, not a dead run
        return [record(kind, kwargs, "no error", f"{type(exc).__name__}: {exc}", FAIL)]


# --------------------------------------------------------------------------
# suite assembly


def suite_cells(suite: str, n_max: int, samples: int = 500, seed: int = 0, cap: int = 10) -> list:
    if suite == "path-identity":
        return [("two-colored", {"n": n, "r": r, "cap": cap}) for n in range(3, n_max + 1) for r in range(n - 2)]
    if suite == "schur-rows":
        return [("schur-rows", {"n": n, "r": r, "j": j}) for n, r, j in paths.all_nrj(n_max)]
    if suite == "pieri-oracle":
        return [("pieri", {"size": s, "max_parts": PIERI_PARTS}) for s in range(0, PIERI_SIZE + 1)]
    if suite == "psi":
        return [("psi", {"b": b}) for b in range(1, PSI_BOUND + 1)]
    if suite == "bijection":
        return [("bijection", {"n": n, "r": r, "j": j, "cap": cap}) for n, r, j in paths.all_nrj(n_max)]
    if suite == "divisors":
        return [("divisors", {"n": n}) for n in range(3, n_max + 1)]
    if suite in ("blocks", "lowrank", "reconstruct"):
        return [(suite, {"n": n, "samples": samples, "seed": seed}) for n in range(4, n_max + 1)]
    if suite == "all":
        return [c for s in SUITES for c in suite_cells(s, n_max, samples, seed, cap)]
    raise ValueError(f"unknown suite {suite!r}")


def run_cells(cells: list, jobs: int = 1) -> list[dict]:
    if jobs <= 1 or len(cells) <= 1:
        results = [run_cell(c) for c in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_cell, cells))
    return [rec for recs in results for rec in recs]


def run_suite(suite: str, n_max: int, samples: int = 500, seed: int = 0, jobs: int = 1, cap: int = 10) -> list[dict]:
    return run_cells(suite_cells(suite, n_max, samples, seed, cap), jobs)


# --------------------------------------------------------------------------
# tables


def _table_cell(kind: str, n: int, combinatorial_cap: int):
    recs = []
    if kind == "degree":
        routes = ("closed", "recurrence") + (("combinatorial",) if n <= combinatorial_cap else ())
        values = deg.degree_routes(n, routes)
        q = deg.q(n)
        status = PASS if all(v == q for v in values.values()) else FAIL
        recs.append(record("degree", {"n": n, "routes": list(routes)}, q, values["closed"], status))
        return recs
    for r in range(0, n - 2):
        if kind == "H":
            closed = deg.h_closed(n, r)
            if n <= combinatorial_cap:
                recs.append(record("H", {"n": n, "r": r, "route": "combinatorial"}, closed, deg.h_combinatorial(n, r)))
            else:
                recs.append(record("H", {"n": n, "r": r, "route": "closed"}, closed, closed))
        elif kind == "F":
            closed = deg.f_closed(n, r)
            source = "combinatorial" if n <= combinatorial_cap else "closed"
            actual = deg.f_recurrence(n, r, h_source=source)
            recs.append(record("F", {"n": n, "r": r, "route": f"recurrence/{source}"}, closed, actual))
        else:
            raise ValueError(f"unknown table {kind!r}")
    return recs


def table_records(kind: str, n_max: int, combinatorial_cap: int = 10) -> list[dict]:
    if kind not in ("F", "H", "degree"):
        raise ValueError(f"unknown table {kind!r}")
    return [rec for n in range(3, n_max + 1) for rec in _table_cell(kind, n, combinatorial_cap)]


__all__ = [
    "SUITES",
    "compositions",
    "run_cell",
    "run_cells",
    "run_suite",
    "suite_cells",
    "table_records",
]
