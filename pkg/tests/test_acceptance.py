"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

from unimodal import binomial as bn
from unimodal import chains as ch
from unimodal import injections as inj
from unimodal import operators as op
from unimodal import suites
from unimodal.export import export_dot
from unimodal.report import recount
from unimodal.subsets import Subset

GOLDEN = Path(__file__).parent / "golden" / "recursive_scd_3.dot"


def _failed(records):
    return [r for r in records if not r.passed]


def _verdict(ok, detail):
    return bool(ok), detail


def criterion_1():
    t0 = time.perf_counter()
    recs = [r for n in range(61) for r in bn.verify_monotone(n)]
    dt = time.perf_counter() - t0
    eq = sorted({r.params["n"] for r in recs if r.info["equal"]})
    ok = not _failed(recs) and eq == list(range(1, 61, 2)) and dt < 1.0
    return _verdict(ok, f"{len(recs)} (n,k) pairs, equality exactly at odd n, {dt:.3f}s (< 1s)")


def criterion_2():
    t0 = time.perf_counter()
    bad = [(n, k) for n in range(61) for k in range(n + 1)
           if bn.binomial_pascal(n, k) != bn.binomial_factorial(n, k) or bn.factorial_remainder(n, k)]
    dt = time.perf_counter() - t0
    return _verdict(not bad and dt < 1.0, f"{sum(n + 1 for n in range(61))} entries, mismatches={bad[:3]}, {dt:.3f}s (< 1s)")


def criterion_3():
    t, r = inj.prefix_swap(Subset.of(11, [1, 2, 4, 11]))
    return _verdict(str(t) == "{3,5,6,7,11}" and r == 7, f"{{1,2,4,11}} -> {t}, r={r}")


def criterion_4():
    t0 = time.perf_counter()
    rep = suites.injections_suite(n_max=20, gk_n_max=0)
    recs = [r for r in rep.records if r.id == "inject.prefix_swap"]
    dt = time.perf_counter() - t0
    ok = len(recs) == 20 and not _failed(recs) and dt < 600
    return _verdict(ok, f"n=1..20 all k<n/2, zero collisions, sizes k+1, {dt:.1f}s")


def criterion_5():
    rep = suites.chains_suite(n_max=16, compare_n_max=0)
    display = [r for r in rep.records if r.id == "chains.reference_display"]
    valid = [r for r in rep.records if r.id == "chains.valid_scd"]
    ok = len(display) == 3 and len(valid) == 48 and not _failed(rep.records)
    return _verdict(ok, f"3 methods x n=1..16 valid, n=1,2,3 displays byte-identical, {rep.wall_time:.1f}s")


def criterion_6():
    recs = [r for n in range(1, 13) for r in suites.compare_decompositions(n)]
    identical = all(r.info is None or r.info.get("identical", True) for r in recs)
    note = "all identical" if identical else "GK differs after relabeling (both valid; finding)"
    return _verdict(not _failed(recs), f"n=1..12, {note}")


def criterion_7():
    rep = suites.sperner_suite(exhaustive_n_max=5, random_n_max=14, samples=10_000, levels_n_max=10)
    need = {"sperner.max_antichain", "sperner.lym", "sperner.chain_bound"}
    ok = not _failed(rep.records) and need <= {r.id for r in rep.records}
    return _verdict(ok, f"max antichain n<=5, 10^4 random antichains for each n<=14, {rep.wall_time:.1f}s")


def criterion_8():
    rep = suites.zpoly_suite(binomial_n_max=100, dice_n_max=50, atom_max=8, closure_samples=1000)
    ids = [r.id for r in rep.records]
    ok = not _failed(rep.records) and ids == ["zpoly.binomial_gf", "zpoly.dice", "zpoly.gambling",
                                             "zpoly.atom_products", "zpoly.closure"]
    return _verdict(ok, f"binomial n<=100, dice/gambling n<=50, atoms b,d<=8, 1000 products, {rep.wall_time:.1f}s")


def criterion_9():
    t0 = time.perf_counter()
    rep = suites.operators_suite(eq1_n_max=12, eq2_n_max=10, rank_n_max=12, kernel_n_max=10, fields=(None, 101))
    closed = all(op.mu_partial_sum(n, k, r) == op.mu_partial_sum_closed(n, k, r)
                 for n in range(11) for k in range(1, n + 1) for r in range(1, k + 1))
    dt = time.perf_counter() - t0
    ok = not _failed(rep.records) and closed and dt < 600
    return _verdict(ok, f"{len(rep.records)} checks over Q and GF(101), closed form ok={closed}, {dt:.1f}s")


def criterion_10():
    rep = suites.chebyshev_suite(exact_n_max=2000, theta_n_max=1_000_000, pi_limit=1_000_000)
    pi = next(r for r in rep.records if r.id == "chebyshev.pi_comparison")
    flagged = pi.info["flagged"]
    ok = not _failed(rep.records) and rep.wall_time < 60
    return _verdict(ok, f"rel tol 1e-6, pi table to 10^6 (flagged rows: {flagged or 'none'}), {rep.wall_time:.1f}s (< 60s)")


def criterion_11():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "unimodal", "all", "--profile", "desk", "--json"],
                          capture_output=True, text=True, encoding="utf-8")
    dt = time.perf_counter() - t0
    doc = json.loads(proc.stdout) if proc.stdout else {"suites": [], "summary": None}
    golden = export_dot(ch.recursive_scd(3)) == GOLDEN.read_text(encoding="utf-8")
    ok = proc.returncode == 0 and recount(doc) == doc["summary"] and golden
    s = doc["summary"] or {}
    return _verdict(ok, f"exit={proc.returncode}, {s.get('passed')}/{s.get('total')} records, "
                        f"golden DOT match={golden}, {dt:.1f}s")


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def _line(i, ok, detail):
    return f"CRITERION {i}: {'PASS' if ok else 'FAIL'} {detail}"


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i):
    from conftest import ACCEPTANCE_LINES

    ok, detail = CRITERIA[i]()
    line = _line(i, ok, detail)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


if __name__ == "__main__":
    results = []
    for i, fn in CRITERIA.items():
        ok, detail = fn()
        print(_line(i, ok, detail), flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
