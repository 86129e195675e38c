"""The ten acceptance criteria at full contract sizes.

Each test runs one criterion through the library's own harness, prints
a single pass/fail line straight to the terminal (bypassing capture),
and asserts both the verdict and the criterion's wall-clock budget.
Criteria 4, 5 and 8 share one corpus and one run by design.
"""

import time

import pytest

from nearconv import acceptance


def report(capsys, num, name, ok, detail):
    status = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"criterion {num:2d} {name}: {status} - {detail}")


@pytest.fixture(scope="module")
def knapsack_run():
    t0 = time.perf_counter()
    results = acceptance.run_knapsack_criteria(trials=300, seed=404)
    return results, time.perf_counter() - t0


def test_criterion_01_minplus_exactness(capsys):
    t0 = time.perf_counter()
    ok, detail = acceptance.criterion_minplus_exact(trials=500, seed=101)
    elapsed = time.perf_counter() - t0
    report(capsys, 1, "min-plus exactness", ok, detail)
    assert ok, detail
    assert elapsed < 60, f"budget 60s exceeded: {elapsed:.1f}s"


def test_criterion_02_convex_kernel(capsys):
    t0 = time.perf_counter()
    ok, detail = acceptance.criterion_convex_kernel(trials=300, seed=202)
    elapsed = time.perf_counter() - t0
    report(capsys, 2, "convex kernel witnesses", ok, detail)
    assert ok, detail
    assert elapsed < 10, f"budget 10s exceeded: {elapsed:.1f}s"


def test_criterion_03_banded_sumset(capsys):
    t0 = time.perf_counter()
    ok, detail = acceptance.criterion_sumset_kernel(trials=300, seed=303)
    elapsed = time.perf_counter() - t0
    report(capsys, 3, "banded sumset kernel", ok, detail)
    assert ok, detail
    assert elapsed < 30, f"budget 30s exceeded: {elapsed:.1f}s"


def test_criterion_04_knapsack_soundness(capsys, knapsack_run):
    results, elapsed = knapsack_run
    ok, detail = results[4]
    report(capsys, 4, "knapsack soundness", ok, detail)
    assert ok, detail
    assert elapsed < 120, f"budget 120s exceeded: {elapsed:.1f}s"


def test_criterion_05_knapsack_optimality(capsys, knapsack_run):
    results, _ = knapsack_run
    ok, detail = results[5]
    report(capsys, 5, "knapsack optimality rate", ok, detail)
    assert ok, detail


def test_criterion_06_symmetric_solver(capsys):
    t0 = time.perf_counter()
    ok, detail = acceptance.criterion_symmetric(trials=300, seed=505)
    elapsed = time.perf_counter() - t0
    report(capsys, 6, "symmetric solver", ok, detail)
    assert ok, detail
    assert elapsed < 120, f"budget 120s exceeded: {elapsed:.1f}s"


def test_criterion_07_gap_preservation(capsys):
    t0 = time.perf_counter()
    ok, detail = acceptance.criterion_gap_preservation(trials=200, seed=606)
    elapsed = time.perf_counter() - t0
    report(capsys, 7, "gap preservation", ok, detail)
    assert ok, detail
    assert elapsed < 20, f"budget 20s exceeded: {elapsed:.1f}s"


def test_criterion_08_slice_gaps(capsys, knapsack_run):
    results, _ = knapsack_run
    ok, detail = results[8]
    report(capsys, 8, "slice near-concavity", ok, detail)
    assert ok, detail


def test_criterion_09_delta_scaling(capsys):
    t0 = time.perf_counter()
    ok, detail = acceptance.criterion_delta_scaling(seed=707)
    elapsed = time.perf_counter() - t0
    report(capsys, 9, "delta scaling", ok, detail)
    assert ok, detail
    assert elapsed < 60, f"budget 60s exceeded: {elapsed:.1f}s"


def test_criterion_10_box_counters(capsys):
    ok, detail = acceptance.criterion_box_counters(trials=50, seed=808)
    report(capsys, 10, "box counters", ok, detail)
    assert ok, detail
