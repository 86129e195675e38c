"""Lower convex hulls of integer sequences, evaluated exactly.

The hull of f is the greatest convex function below the points
(i, f(i)). Hull values at integer indices are rationals; we store them
split as floor + num/den (0 <= num < den) in three int64 arrays, which
is exact and still vectorizes. The hull distance of f is the largest
gap f(i) - hull(i); sequences with small hull distance are the inputs
the fast convolution accepts.
"""
from __future__ import annotations

import numpy as np

from .rational import Rational


def lower_hull(values):
    """Breakpoints of the lower convex hull, as (index, value) pairs.

    Monotone-chain scan; collinear middle points are dropped, so
    consecutive segment slopes increase strictly.
    """
    pts = [(i, int(v)) for i, v in enumerate(values)]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            ox, oy = hull[-2]
            ax, ay = hull[-1]
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _eval_segments(breaks, top):
    """Hull value at each index in [0..top], split exactly.

    Within a segment the hull is y0 + dy*t/dx; with dy = q*dx + r
    (Python divmod, 0 <= r < dx) that is y0 + q*t + (r*t)/dx, and
    r*t stays tiny, so int64 never overflows even for steep segments.
    """
    floors = np.empty(top + 1, dtype=np.int64)
    nums = np.zeros(top + 1, dtype=np.int64)
    dens = np.ones(top + 1, dtype=np.int64)
    if len(breaks) == 1:
        floors[:] = breaks[0][1]
        return floors, nums, dens
    for (x0, y0), (x1, y1) in zip(breaks, breaks[1:]):
        dx = x1 - x0
        q, r = divmod(y1 - y0, dx)
        t = np.arange(dx + 1, dtype=np.int64)
        rt = r * t
        floors[x0 : x1 + 1] = y0 + q * t + rt // dx
        nums[x0 : x1 + 1] = rt % dx
        dens[x0 : x1 + 1] = dx
    return floors, nums, dens


class HullApprox:
    """A sequence together with its exact lower hull.

    floors/nums/dens give the hull value at every index; float_vals is
    a float64 rendering for screening (never for decisions on its own).
    """

    __slots__ = (
        "values",
        "breakpoints",
        "floors",
        "nums",
        "dens",
        "float_vals",
        "raw_gap",
        "delta",
    )

    def __init__(self, values):
        arr = np.asarray(values, dtype=np.int64)
        self.values = arr
        self.breakpoints = lower_hull(arr)
        self.floors, self.nums, self.dens = _eval_segments(
            self.breakpoints, len(arr) - 1
        )
        self.float_vals = self.floors + self.nums / self.dens
        self.raw_gap = self._max_gap()
        self.delta = self.raw_gap if self.raw_gap > Rational(1) else Rational(1)

    def _max_gap(self):
        # gap(i) = (f(i) - floor_i) - num_i/den_i, and the fractional part
        # is in [0,1), so the max lives where the integer part W peaks.
        w = self.values - self.floors
        m = int(w.max())
        cand = np.nonzero(w == m)[0]
        best = cand[0]
        for i in cand[1:]:
            # smaller num/den means larger gap
            if self.nums[i] * self.dens[best] < self.nums[best] * self.dens[i]:
                best = i
        i = int(best)
        return Rational(
            m * int(self.dens[i]) - int(self.nums[i]), int(self.dens[i])
        )

    def value_at(self, i):
        return Rational(int(self.floors[i])) + Rational(
            int(self.nums[i]), int(self.dens[i])
        )

    def gap_at(self, i):
        return Rational(int(self.values[i])) - self.value_at(i)


def lower_hull_gap(values):
    """Largest distance from a point down to the lower hull (raw, >= 0)."""
    return HullApprox(values).raw_gap


def upper_hull_gap(values):
    """Largest distance up to the upper concave hull.

    By symmetry this is the lower-hull gap of the negated sequence.
    """
    arr = np.asarray(values, dtype=np.int64)
    return HullApprox(-arr).raw_gap
