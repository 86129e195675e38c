"""Compare the pure-numpy and compiled kernel backends.

Times each shared kernel on realistic shapes, then one end-to-end
near-convex convolution per backend. Run from the repo root:

    python3 benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from nearconv import _kernels as kernels
from nearconv import generators
from nearconv._kernels import _purecore
from nearconv.hull import HullApprox
from nearconv.minplus import ConvolveConfig, minplus_nearconvex


def best_of(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        el = time.perf_counter() - t0
        best = el if best is None or el < best else best
    return best


def make_cases():
    rng = np.random.default_rng(17)
    n = 1 << 14
    w = rng.integers(1, 64, size=256).astype(np.int64)
    p = rng.integers(1, 64, size=256).astype(np.int64)
    f_small = rng.integers(-1000, 1000, size=3000).astype(np.int64)
    g_small = rng.integers(-1000, 1000, size=3000).astype(np.int64)
    box = rng.integers(-1000, 1000, size=4096).astype(np.int64)
    fh = HullApprox(generators.nearconvex_sequence(3, n, 8).values)
    gh = HullApprox(generators.nearconvex_sequence(4, n, 8).values)
    hull_args = (fh.floors, fh.nums, fh.dens, gh.floors, gh.nums, gh.dens)
    return [
        ("dp_profit (256 items, W=8192)", "dp_profit", (w, p, 8192)),
        ("dp_min_weight (256 items, P=8192)", "dp_min_weight", (p, w, 8192)),
        ("minplus_brute (3000 x 3000)", "minplus_brute", (f_small, g_small)),
        ("box_min_by_diagonal (4096^2)", "box_min_by_diagonal", (box, box)),
        (f"witness_walk (n={n})", "witness_walk", hull_args),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    if "fast" not in kernels.available():
        print("compiled backend not built; nothing to compare")
        return
    from nearconv._kernels import _fastcore

    print(f"{'kernel':<36} {'pure':>10} {'fast':>10} {'speedup':>8}")
    for label, name, fargs in make_cases():
        tp = best_of(lambda: getattr(_purecore, name)(*fargs), args.repeats)
        tf = best_of(lambda: getattr(_fastcore, name)(*fargs), args.repeats)
        print(f"{label:<36} {tp * 1e3:>8.1f}ms {tf * 1e3:>8.1f}ms {tp / tf:>7.1f}x")

    f = generators.nearconvex_sequence(5, 1 << 15, 16, slope=200)
    g = generators.nearconvex_sequence(6, 1 << 15, 16, slope=200)
    cfg = ConvolveConfig(force="recursive")
    start = kernels.active()
    try:
        times = {}
        for backend in ("pure", "fast"):
            kernels.set_backend(backend)
            times[backend] = best_of(
                lambda: minplus_nearconvex(f, g, cfg), max(2, args.repeats // 2)
            )
        label = "minplus_nearconvex (n=2^15, d=16)"
        print(
            f"{label:<36} {times['pure'] * 1e3:>8.1f}ms "
            f"{times['fast'] * 1e3:>8.1f}ms "
            f"{times['pure'] / times['fast']:>7.1f}x"
        )
    finally:
        kernels.set_backend(start)


if __name__ == "__main__":
    main()
