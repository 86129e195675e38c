"""The reference implementations get their own sanity checks."""

import random
from fractions import Fraction

import numpy as np
import pytest

from nearconv import _kernels as kernels
from nearconv import oracles
from nearconv.knapsack import KnapsackInstance, bellman_dp


def test_brute_box_minplus_tiny():
    out = oracles.brute_box_minplus([0, 1], [0, 2])
    assert out.tolist() == [0, 1, 3]


def test_brute_box_matches_kernel():
    rng = random.Random(8101)
    for _ in range(40):
        n, m = rng.randint(1, 30), rng.randint(1, 30)
        f = np.array([rng.randint(-100, 100) for _ in range(n)], dtype=np.int64)
        g = np.array([rng.randint(-100, 100) for _ in range(m)], dtype=np.int64)
        assert np.array_equal(
            oracles.brute_box_minplus(f, g), kernels.box_min_by_diagonal(f, g)
        )


def test_brute_box_size_guard():
    big = np.zeros(3000, dtype=np.int64)
    with pytest.raises(ValueError):
        oracles.brute_box_minplus(big, big)


def test_brute_knapsack_vs_bellman():
    rng = random.Random(8102)
    for _ in range(25):
        n = rng.randint(1, 12)
        items = [(rng.randint(1, 30), rng.randint(1, 30)) for _ in range(n)]
        W = rng.randint(1, 60)
        inst = KnapsackInstance(items, W)
        value, chosen = oracles.brute_knapsack(inst)
        table = bellman_dp(items, W)
        assert value == int(table.values[W])
        assert sum(items[t][1] for t in chosen) <= W
        assert sum(items[t][0] for t in chosen) == value


def test_brute_knapsack_item_cap():
    inst = KnapsackInstance([(1, 1)] * 25, 5)
    with pytest.raises(ValueError):
        oracles.brute_knapsack(inst)


def test_chord_hull_values():
    vals = [0, 5, 1]
    # chord from (0,0) to (2,1) passes through 1/2 at index 1
    assert oracles.lower_hull_value(vals, 1) == Fraction(1, 2)
    assert oracles.lower_hull_value(vals, 0) == 0
    assert oracles.lower_hull_value(vals, 2) == 1
    assert oracles.lower_gap(vals) == Fraction(9, 2)


def test_upper_is_mirror_of_lower():
    rng = random.Random(8103)
    for _ in range(20):
        vals = [rng.randint(-50, 50) for _ in range(rng.randint(1, 12))]
        neg = [-v for v in vals]
        for i in range(len(vals)):
            assert oracles.upper_hull_value(vals, i) == -oracles.lower_hull_value(
                neg, i
            )
        assert oracles.upper_gap(vals) == oracles.lower_gap(neg)


def test_hull_value_at_most_sequence():
    rng = random.Random(8104)
    for _ in range(20):
        vals = [rng.randint(-50, 50) for _ in range(rng.randint(1, 15))]
        for i in range(len(vals)):
            assert oracles.lower_hull_value(vals, i) <= vals[i]
