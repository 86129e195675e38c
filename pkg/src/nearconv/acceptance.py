"""The ten acceptance checks behind `nearconv verify` and the test suite.

Each criterion function returns (ok, detail). They are deterministic
given the seed and deliberately go through the public entry points.
"""
from __future__ import annotations

import random
import time

import numpy as np

from . import generators, oracles
from .convexconv import convex_minplus
from .hull import upper_hull_gap
from .knapsack import Normalized, bellman_dp, preprocess, solve_fast, solve_symmetric
from .minplus import ConvolveConfig, maxplus_nearconcave, minplus_nearconvex, minplus_with_trace
from .rational import Rational
from .seq import naive_minplus
from .sumset import banded_sumset_min

SIZE_SLACK = 4  # additive constant in the decoded-size bound


def criterion_minplus_exact(trials=500, seed=101):
    """1: recursive convolution equals the quadratic oracle on random
    integer pairs (lengths to 512, values to 1e6)."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    cfg = ConvolveConfig(force="recursive")
    for t in range(trials):
        n = rng.randint(1, 512)
        m = rng.randint(1, 512)
        f = generators.random_sequence(rng.randrange(2**32), n, 10**6)
        g = generators.random_sequence(rng.randrange(2**32), m, 10**6)
        h = minplus_nearconvex(f, g, cfg)
        if h != naive_minplus(f, g):
            return False, f"mismatch at trial {t} (n={n}, m={m})"
    dt = time.perf_counter() - t0
    return True, f"{trials} random pairs exact ({dt:.1f}s)"


def criterion_convex_kernel(trials=300, seed=202):
    """2: convex witness walk equals the oracle and all witnesses are
    the smallest index attaining the minimum."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(1, 256)
        m = rng.randint(1, 256)
        f = generators.convex_sequence(rng.randrange(2**32), n)
        g = generators.convex_sequence(rng.randrange(2**32), m)
        h, istar = convex_minplus(f, g)
        if h != naive_minplus(f, g):
            return False, f"value mismatch at trial {t}"
        fa, ga = f.values, g.values
        for k in range(n + m - 1):
            ilo = max(0, k - (m - 1))
            ihi = min(n - 1, k)
            window = fa[ilo : ihi + 1] + ga[k - ilo : k - ihi - 1 if k > ihi else None : -1]
            first = ilo + int(np.argmin(window))
            if first != int(istar[k]):
                return False, f"non-minimal witness at trial {t}, k={k}"
    dt = time.perf_counter() - t0
    return True, f"{trials} convex pairs exact with minimal witnesses ({dt:.1f}s)"


def harvest_case3_boxes(count=300, seed=303):
    """Collect Case-3 boxes (side >= 2) from live recursive runs."""
    rng = random.Random(seed)
    boxes = []
    while len(boxes) < count:
        n = rng.randint(64, 700)
        m = rng.randint(64, 700)
        delta = rng.randint(0, 24)
        f = generators.nearconvex_sequence(rng.randrange(2**32), n, delta)
        g = generators.nearconvex_sequence(rng.randrange(2**32), m, delta)
        _, trace = minplus_with_trace(
            f, g, ConvolveConfig(force="recursive", harvest=True)
        )
        boxes.extend(trace.boxes)
    return boxes[:count]


def criterion_sumset_kernel(trials=300, seed=303):
    """3: the banded kernel equals the box oracle on harvested Case-3
    boxes, and its decoded point count respects the size bound."""
    t0 = time.perf_counter()
    boxes = harvest_case3_boxes(trials, seed)
    for t, box in enumerate(boxes):
        res = banded_sumset_min(
            box.fv, box.gv, box.lines, box.ceil_delta, method="transform"
        )
        want = oracles.brute_box_minplus(box.fv, box.gv)
        if not np.array_equal(res.values, want):
            return False, f"value mismatch on box {t} (side {len(box.fv)})"
        cap = (len(box.fv) + len(box.gv)) * (8 * box.ceil_delta + SIZE_SLACK)
        if res.decoded_size is None or res.decoded_size > cap:
            return False, f"decoded size {res.decoded_size} > {cap} on box {t}"
    dt = time.perf_counter() - t0
    return True, f"{trials} harvested boxes exact, sizes within bound ({dt:.1f}s)"


def _knapsack_corpus(trials, seed):
    rng = random.Random(seed)
    for t in range(trials):
        n = 128
        pmax = rng.randint(2, 64)
        wmax = rng.randint(2, 64)
        inst = generators.knapsack_instance(
            rng.randrange(2**32), n, pmax, wmax, capacity=rng.randint(1, n * wmax)
        )
        yield t, inst


def _dp_optimum(inst):
    cap = min(inst.capacity, int(inst.weights.sum()))
    return int(bellman_dp(inst.items, cap).values[cap])


def run_knapsack_criteria(trials=300, seed=404):
    """Shared corpus behind criteria 4 (soundness), 5 (optimality rate),
    and 8 (slice gaps). Returns {criterion: (ok, detail)}."""
    t0 = time.perf_counter()
    optimal = 0
    slice_ok, slice_detail = True, "no windowed runs reached combination"
    worst_slice = None  # (gap, pmax) with largest gap/pmax
    for t, inst in _knapsack_corpus(trials, seed):
        pre = preprocess(inst)
        pmax_norm = pre.inst.pmax if isinstance(pre, Normalized) else None
        gaps = []

        def hook(level, group, offset, values, gaps=gaps):
            gaps.append(upper_hull_gap(values))

        sol = solve_fast(inst, seed=1000 + t, on_slice=hook)
        opt = _dp_optimum(inst)
        if sol.value > opt:
            return {
                4: (False, f"value above optimum at trial {t}"),
                5: (False, "aborted"),
                8: (slice_ok, slice_detail),
            }
        profit = sum(inst.items[i][0] for i in sol.chosen)
        weight = sum(inst.items[i][1] for i in sol.chosen)
        if profit != sol.value or weight != sol.weight or weight > inst.capacity:
            return {
                4: (False, f"infeasible reconstruction at trial {t}"),
                5: (False, "aborted"),
                8: (slice_ok, slice_detail),
            }
        optimal += sol.value == opt
        if gaps:
            worst = max(gaps)
            if slice_ok and worst > Rational(pmax_norm):
                slice_ok = False
                slice_detail = f"slice gap {worst} > pmax {pmax_norm} at trial {t}"
            if worst_slice is None or worst * worst_slice[1] > worst_slice[0] * pmax_norm:
                worst_slice = (worst, pmax_norm)
    dt = time.perf_counter() - t0
    rate = optimal / trials
    base = f"{trials} instances: 100% sound and feasible"
    if slice_ok and worst_slice is not None:
        slice_detail = f"worst slice gap {worst_slice[0]} vs pmax {worst_slice[1]}"
    return {
        4: (True, f"{base} ({dt:.1f}s)"),
        5: (rate >= 0.95, f"{optimal}/{trials} optimal ({100 * rate:.1f}%)"),
        8: (slice_ok, slice_detail),
    }


def criterion_symmetric(trials=300, seed=505):
    """6: the weight-indexed solver is sound and whp-optimal on its own
    corpus."""
    t0 = time.perf_counter()
    optimal = 0
    for t, inst in _knapsack_corpus(trials, seed):
        sol = solve_symmetric(inst, seed=2000 + t)
        opt = _dp_optimum(inst)
        if sol.value > opt:
            return False, f"value above optimum at trial {t}"
        profit = sum(inst.items[i][0] for i in sol.chosen)
        weight = sum(inst.items[i][1] for i in sol.chosen)
        if profit != sol.value or weight != sol.weight or weight > inst.capacity:
            return False, f"infeasible reconstruction at trial {t}"
        optimal += sol.value == opt
    dt = time.perf_counter() - t0
    rate = optimal / trials
    ok = rate >= 0.95
    return ok, f"{trials} instances sound, {100 * rate:.1f}% optimal ({dt:.1f}s)"


def criterion_gap_preservation(trials=200, seed=606):
    """7: max-plus of near-concave pairs never increases the hull gap."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    for t in range(trials):
        n = rng.randint(2, 400)
        m = rng.randint(2, 400)
        delta = rng.randint(0, 30)
        f = generators.nearconcave_sequence(rng.randrange(2**32), n, delta)
        g = generators.nearconcave_sequence(rng.randrange(2**32), m, delta)
        h = maxplus_nearconcave(f, g)
        cap = max(upper_hull_gap(f.values), upper_hull_gap(g.values))
        got = upper_hull_gap(h.values)
        if got > cap:
            return False, f"gap grew at trial {t}: {got} > {cap}"
    dt = time.perf_counter() - t0
    return True, f"{trials} pairs, gap never grew ({dt:.1f}s)"


def criterion_delta_scaling(seed=707):
    """9: doubling work is near-linear in the hull distance: the n=2^15
    wall-time ratio between delta 64 and delta 4 stays under 32."""
    t0 = time.perf_counter()
    cfg = ConvolveConfig(force="recursive")
    times = {}
    for delta in (4, 64):
        f = generators.nearconvex_sequence(seed, 2**15, delta, slope=200)
        g = generators.nearconvex_sequence(seed + 1, 2**15, delta, slope=200)
        best = None
        for _ in range(2):
            t1 = time.perf_counter()
            minplus_nearconvex(f, g, cfg)
            el = time.perf_counter() - t1
            best = el if best is None or el < best else best
        times[delta] = best
    ratio = times[64] / times[4]
    dt = time.perf_counter() - t0
    ok = ratio <= 32
    return ok, (
        f"T(64)={times[64]:.2f}s T(4)={times[4]:.2f}s ratio {ratio:.2f} "
        f"(cap 32) ({dt:.1f}s)"
    )


def criterion_box_counters(trials=50, seed=808):
    """10: at most two Case-3 and two Case-4 boxes per (side, diagonal)."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    worst3 = worst4 = 0
    for t in range(trials):
        n = rng.randint(8, 900)
        m = rng.randint(8, 900)
        delta = rng.randint(0, 40)
        f = generators.nearconvex_sequence(rng.randrange(2**32), n, delta)
        g = generators.nearconvex_sequence(rng.randrange(2**32), m, delta)
        _, trace = minplus_with_trace(f, g, ConvolveConfig(force="recursive"))
        m3 = max(trace.case3.values(), default=0)
        m4 = max(trace.case4.values(), default=0)
        worst3 = max(worst3, m3)
        worst4 = max(worst4, m4)
        if m3 > 2 or m4 > 2:
            return False, f"counter {max(m3, m4)} > 2 at trial {t}"
    dt = time.perf_counter() - t0
    return True, f"{trials} runs, max counters {worst3}/{worst4} ({dt:.1f}s)"


def run_all(trials=None, seed=None):
    """Run every criterion; returns [(number, name, ok, detail)].

    trials scales the per-criterion corpus sizes down for smoke runs
    (never up past the contract sizes); seed offsets all base seeds.
    """
    s = 0 if seed is None else seed

    def sized(full):
        return full if trials is None else max(1, min(full, trials))

    results = []
    ok, detail = criterion_minplus_exact(sized(500), 101 + s)
    results.append((1, "min-plus exactness", ok, detail))
    ok, detail = criterion_convex_kernel(sized(300), 202 + s)
    results.append((2, "convex kernel", ok, detail))
    ok, detail = criterion_sumset_kernel(sized(300), 303 + s)
    results.append((3, "banded sumset kernel", ok, detail))
    knap = run_knapsack_criteria(sized(300), 404 + s)
    results.append((4, "knapsack soundness", *knap[4]))
    results.append((5, "knapsack optimality rate", *knap[5]))
    ok, detail = criterion_symmetric(sized(300), 505 + s)
    results.append((6, "symmetric solver", ok, detail))
    ok, detail = criterion_gap_preservation(sized(200), 606 + s)
    results.append((7, "gap preservation", ok, detail))
    results.append((8, "slice near-concavity", *knap[8]))
    ok, detail = criterion_delta_scaling(707 + s)
    results.append((9, "delta scaling", ok, detail))
    ok, detail = criterion_box_counters(sized(50), 808 + s)
    results.append((10, "box counters", ok, detail))
    return results
