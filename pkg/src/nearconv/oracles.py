"""Slow, independent reference implementations.

Everything here exists to check the fast code, so nothing here may
share code with it: plain definitions, stdlib Fractions, no calls into
the hull/convolution/knapsack modules. Sizes are expected to be small.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def brute_box_minplus(fv, gv):
    """Per-diagonal minimum over the full index box, via the outer sum.

    Anti-diagonals of the sum matrix are plain diagonals after a
    left-right flip, which is a different route than any shift loop in
    the engine.
    """
    f = np.asarray(fv, dtype=np.int64)
    g = np.asarray(gv, dtype=np.int64)
    n, m = len(f), len(g)
    if n * m > 1 << 22:
        raise ValueError("oracle box too large")
    flipped = np.fliplr(np.add.outer(f, g))
    out = np.empty(n + m - 1, dtype=np.int64)
    for k in range(n + m - 1):
        out[k] = flipped.diagonal(m - 1 - k).min()
    return out


def brute_knapsack(inst):
    """Exhaustive 0-1 knapsack over a KnapsackInstance (n capped at 24).

    Returns (value, items): the optimum and one witness subset, as a
    tuple of item indices.
    """
    p = np.asarray(inst.profits, dtype=np.int64)
    w = np.asarray(inst.weights, dtype=np.int64)
    capacity = inst.capacity
    n = len(p)
    if n > 24:
        raise ValueError("too many items for exhaustive search")
    best_v = 0
    best_mask = 0
    cols = np.arange(n, dtype=np.uint32)
    for lo in range(0, 1 << n, 1 << 16):
        hi = min(1 << n, lo + (1 << 16))
        masks = np.arange(lo, hi, dtype=np.uint32)
        bits = ((masks[:, None] >> cols) & 1).astype(np.int64)
        wsum = bits @ w
        psum = np.where(wsum <= capacity, bits @ p, -1)
        j = int(np.argmax(psum))
        if psum[j] > best_v:
            best_v = int(psum[j])
            best_mask = lo + j
    items = tuple(i for i in range(n) if (best_mask >> i) & 1)
    return best_v, items


def lower_hull_value(values, i):
    """Greatest convex minorant at index i, by direct definition: the
    hull's epigraph is the convex hull of the point set, so the value at
    i is the smallest chord through any pair a <= i <= b (pairs suffice
    in one dimension)."""
    best = None
    n = len(values)
    for a in range(i + 1):
        for b in range(i, n):
            if a == b:
                v = Fraction(int(values[i]))
            else:
                va, vb = int(values[a]), int(values[b])
                v = Fraction(va * (b - i) + vb * (i - a), b - a)
            if best is None or v < best:
                best = v
    return best


def upper_hull_value(values, i):
    """Least concave majorant at index i: largest covering chord."""
    return -lower_hull_value([-int(v) for v in values], i)


def lower_gap(values):
    return max(
        Fraction(int(values[i])) - lower_hull_value(values, i)
        for i in range(len(values))
    )


def upper_gap(values):
    return max(
        upper_hull_value(values, i) - Fraction(int(values[i]))
        for i in range(len(values))
    )
