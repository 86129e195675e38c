"""Lower hull construction and exact gap arithmetic."""
import random
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from nearconv import oracles
from nearconv.hull import HullApprox, lower_hull, lower_hull_gap, upper_hull_gap
from nearconv.rational import Rational

values_st = st.lists(
    st.integers(min_value=-500, max_value=500), min_size=1, max_size=50
)


def test_breakpoints_frozen_example():
    h = HullApprox(np.array([0, 5, 1], dtype=np.int64))
    assert h.breakpoints == [(0, 0), (2, 1)]
    # worst gap is at index 1: 5 - 1/2
    assert h.raw_gap == Rational(9, 2)
    assert h.value_at(1) == Rational(1, 2)
    assert h.gap_at(1) == Rational(9, 2)


def test_convex_input_is_its_own_hull():
    h = HullApprox(np.array([3, 1, 0, 2, 7], dtype=np.int64))
    assert [b[0] for b in h.breakpoints] == [0, 1, 2, 3, 4]
    assert h.raw_gap == Rational(0)
    assert h.delta == Rational(1)  # clamped


def test_single_point():
    h = HullApprox(np.array([42], dtype=np.int64))
    assert h.breakpoints == [(0, 42)]
    assert h.raw_gap == Rational(0)


def test_collinear_points_dropped():
    hull = lower_hull(np.array([0, 1, 2, 3], dtype=np.int64))
    assert hull == [(0, 0), (3, 3)]


@given(values_st)
@settings(max_examples=80)
def test_hull_matches_chord_oracle(vals):
    arr = np.array(vals, dtype=np.int64)
    h = HullApprox(arr)
    for i in range(len(arr)):
        want = oracles.lower_hull_value(arr, i)
        assert h.value_at(i).as_fraction() == want
        assert h.gap_at(i).as_fraction() == Fraction(int(arr[i])) - want


@given(values_st)
@settings(max_examples=60)
def test_hull_sandwich(vals):
    arr = np.array(vals, dtype=np.int64)
    h = HullApprox(arr)
    for i in range(len(arr)):
        v = h.value_at(i)
        assert v <= Rational(int(arr[i]))
        assert Rational(int(arr[i])) - v <= h.raw_gap


@given(values_st)
def test_upper_gap_is_lower_gap_of_negation(vals):
    arr = np.array(vals, dtype=np.int64)
    assert upper_hull_gap(arr) == lower_hull_gap(-arr)


def test_gap_argmax_breaks_ties_exactly():
    # two indices tie on the integer part of the gap; the fractional
    # parts differ, forcing the exact comparison path
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(3, 24)
        arr = np.array([rng.randint(-40, 40) for _ in range(n)], dtype=np.int64)
        h = HullApprox(arr)
        best = max(
            Fraction(int(arr[i])) - oracles.lower_hull_value(arr, i)
            for i in range(n)
        )
        assert h.raw_gap.as_fraction() == best


def test_floor_split_invariants():
    rng = random.Random(11)
    arr = np.array([rng.randint(-300, 300) for _ in range(60)], dtype=np.int64)
    h = HullApprox(arr)
    vals = h.floors
    for i in range(len(arr)):
        num, den = int(h.nums[i]), int(h.dens[i])
        assert 0 <= num < den
        assert h.value_at(i) == Rational(int(vals[i])) + Rational(num, den)
