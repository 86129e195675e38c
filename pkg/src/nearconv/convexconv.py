"""Linear-time min-plus convolution of convex sequences.

When f and g are convex the minimizer index of h(k) = min f(i)+g(k-i)
moves right by zero or one as k grows, so a single walk computes every
h(k) together with its witness. Ties resolve to the smallest witness
index, which makes the output path canonical and testable.

`convex_minplus` is the integer front door. `hull_minplus` runs the
same walk on two exact hull evaluations (rational values) and is the
first stage of the near-convex engine.
"""
from __future__ import annotations

import numpy as np

from . import _kernels as kernels
from .rational import Rational
from .seq import IntSeq


def is_convex(values):
    arr = np.asarray(values, dtype=np.int64)
    if len(arr) < 3:
        return True
    d = np.diff(arr)
    return bool((np.diff(d) >= 0).all())


def convex_minplus(f, g):
    """Exact min-plus convolution of two convex integer sequences.

    Returns (h, witnesses): h is an IntSeq of length len(f)+len(g)-1
    and witnesses[k] is the smallest index i with h[k] = f[i]+g[k-i].
    Raises ValueError if either input is not convex.
    """
    if not is_convex(f.values):
        raise ValueError("f is not convex")
    if not is_convex(g.values):
        raise ValueError("g is not convex")
    zero_f = np.zeros(len(f), dtype=np.int64)
    one_f = np.ones(len(f), dtype=np.int64)
    zero_g = np.zeros(len(g), dtype=np.int64)
    one_g = np.ones(len(g), dtype=np.int64)
    istar, h_floor, h_num, _h_den = kernels.witness_walk(
        f.values, zero_f, one_f, g.values, zero_g, one_g
    )
    assert not h_num.any()
    h = IntSeq(h_floor, offset=f.offset + g.offset, validate=False)
    return h, istar


class ConvexConv:
    """Min-plus convolution of two hulls, with exact values and witnesses."""

    __slots__ = ("istar", "floors", "nums", "dens", "float_vals", "n", "m")

    def __init__(self, istar, floors, nums, dens, n, m):
        self.istar = istar
        self.floors = floors
        self.nums = nums
        self.dens = dens
        self.float_vals = floors + nums / dens
        self.n = n
        self.m = m

    def value_at(self, k):
        return Rational(int(self.floors[k])) + Rational(
            int(self.nums[k]), int(self.dens[k])
        )


def hull_minplus(fh, gh):
    """Walk the witness path over two exact hull evaluations."""
    istar, h_floor, h_num, h_den = kernels.witness_walk(
        fh.floors, fh.nums, fh.dens, gh.floors, gh.nums, gh.dens
    )
    return ConvexConv(
        istar,
        h_floor,
        h_num,
        h_den,
        len(fh.floors) - 1,
        len(gh.floors) - 1,
    )
