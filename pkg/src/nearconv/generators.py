"""Seeded input generators for tests, the verify harness, and the CLI.

Everything uses random.Random(seed) so files regenerate byte-identically
across platforms and runs.
"""
from __future__ import annotations

import random

import numpy as np

from .knapsack import KnapsackInstance
from .seq import VALUE_BOUND, IntSeq, negate


def nearconvex_sequence(seed, n, delta, slope=100):
    """Convex base (sorted increments, prefix-summed) plus uniform
    noise in [0..delta]. The hull distance of the result is at most
    max(delta, 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if delta < 0 or slope < 1:
        raise ValueError("delta must be >= 0 and slope >= 1")
    if n * (slope + delta) > VALUE_BOUND:
        raise ValueError("n*slope too large for the value range")
    rng = random.Random(seed)
    inc = sorted(rng.randint(-slope, slope) for _ in range(n - 1))
    vals = np.zeros(n, dtype=np.int64)
    vals[1:] = np.cumsum(np.array(inc, dtype=np.int64))
    if delta:
        vals += np.array([rng.randint(0, delta) for _ in range(n)], dtype=np.int64)
    return IntSeq(vals)


def nearconcave_sequence(seed, n, delta, slope=100):
    return negate(nearconvex_sequence(seed, n, delta, slope))


def convex_sequence(seed, n, slope=100):
    return nearconvex_sequence(seed, n, 0, slope)


def random_sequence(seed, n, bound):
    """Unstructured values, uniform in [-bound..bound]."""
    if n < 1 or bound < 0 or bound > VALUE_BOUND:
        raise ValueError("bad sequence parameters")
    rng = random.Random(seed)
    return IntSeq([rng.randint(-bound, bound) for _ in range(n)])


def knapsack_instance(seed, n, pmax, wmax, capacity=None):
    """Uniform profits in [1..pmax], weights in [1..wmax]; capacity
    drawn from [1..n*wmax] when not given."""
    if n < 1 or pmax < 1 or wmax < 1:
        raise ValueError("n, pmax, wmax must be >= 1")
    rng = random.Random(seed)
    items = [(rng.randint(1, pmax), rng.randint(1, wmax)) for _ in range(n)]
    if capacity is None:
        capacity = rng.randint(1, n * wmax)
    return KnapsackInstance(items, capacity)
