"""Integer sequences, index ranges, and the padding step.

A sequence is a total function on [0..n] stored as an int64 array.
Operating limits are deliberately conservative so that every
intermediate quantity in the engine stays inside int64:

  VALUE_BOUND  caps |f(i)|, LENGTH_BOUND caps the domain size.

Partial results (cells not yet resolved) use the sentinel TOP, chosen
well below 2**63 so min-accumulation never overflows.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from .rational import Rational

VALUE_BOUND = 2**40
LENGTH_BOUND = 2**18

TOP = int(kernels.INT64_INF)


class IntSeq:
    """Immutable integer sequence on [offset .. offset+len-1].

    The offset is bookkeeping for file round-trips and convolution
    (offsets add); all array indexing here is local, from 0.
    """

    __slots__ = ("values", "offset")

    def __init__(self, values, *, offset=0, validate=True):
        arr = np.asarray(values, dtype=np.int64).copy()
        if arr.ndim != 1:
            raise ValueError("sequence must be one-dimensional")
        if validate:
            if len(arr) == 0:
                raise ValueError("sequence must be nonempty")
            if len(arr) > LENGTH_BOUND:
                raise ValueError(f"sequence longer than {LENGTH_BOUND}")
            if len(arr) and (np.abs(arr) > VALUE_BOUND).any():
                raise ValueError(f"sequence values exceed |{VALUE_BOUND}|")
        arr.setflags(write=False)
        self.values = arr
        self.offset = int(offset)

    def __len__(self):
        return len(self.values)

    @property
    def top_index(self):
        return len(self.values) - 1

    def __getitem__(self, i):
        return int(self.values[i])

    def __iter__(self):
        return iter(int(v) for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, IntSeq):
            return NotImplemented
        return self.offset == other.offset and np.array_equal(
            self.values, other.values
        )

    __hash__ = None

    def __repr__(self):
        body = ", ".join(str(int(v)) for v in self.values[:8])
        tail = ", ..." if len(self.values) > 8 else ""
        at = f", offset={self.offset}" if self.offset else ""
        return f"IntSeq([{body}{tail}]{at})"

    def min(self):
        return int(self.values.min())

    def max(self):
        return int(self.values.max())

    def span(self):
        return self.max() - self.min()


def negate(seq):
    return IntSeq(-seq.values, offset=seq.offset, validate=False)


@dataclass(frozen=True, slots=True)
class IndexRange:
    """Inclusive integer range; empty when hi < lo."""

    lo: int
    hi: int

    @staticmethod
    def from_bounds(lo, hi):
        """Round an interval to indices: floor the left end (never below
        zero), ceil the right end."""
        lo_i = max(0, Rational.of(lo).floor())
        hi_i = Rational.of(hi).ceil()
        return IndexRange(lo_i, hi_i)

    @property
    def empty(self):
        return self.hi < self.lo

    def __len__(self):
        return 0 if self.empty else self.hi - self.lo + 1

    def __contains__(self, k):
        return self.lo <= k <= self.hi

    def intersect(self, other):
        return IndexRange(max(self.lo, other.lo), min(self.hi, other.hi))

    def indices(self):
        return range(self.lo, self.hi + 1)


class PartialSeq:
    """Sequence defined on a window [start..start+len-1]; cells may be TOP."""

    __slots__ = ("start", "values")

    def __init__(self, start, values):
        self.start = int(start)
        arr = np.asarray(values, dtype=np.int64)
        self.values = arr

    @property
    def end(self):
        return self.start + len(self.values) - 1

    def get(self, k):
        if not (self.start <= k <= self.end):
            return None
        v = int(self.values[k - self.start])
        return None if v >= TOP else v

    def restrict(self, lo, hi):
        """View of the overlap with [lo..hi]. Empty overlap -> None."""
        a = max(lo, self.start)
        b = min(hi, self.end)
        if b < a:
            return None
        return PartialSeq(a, self.values[a - self.start : b - self.start + 1])

    def __repr__(self):
        return f"PartialSeq(start={self.start}, len={len(self.values)})"


def naive_minplus(f, g):
    """Quadratic reference: h(k) = min over i+j=k of f(i)+g(j)."""
    return IntSeq(
        kernels.minplus_brute(f.values, g.values),
        offset=f.offset + g.offset,
        validate=False,
    )


def naive_maxplus(f, g):
    out = kernels.minplus_brute(-f.values, -g.values)
    return IntSeq(-out, offset=f.offset + g.offset, validate=False)


@dataclass(frozen=True, slots=True)
class PadInfo:
    """How a pair was padded to a common power-of-two domain.

    n, m   top indices of the original pair
    step   slope of the linear tails appended to both sequences
    size   padded length (a power of two; padded top index is size-1)
    """

    n: int
    m: int
    step: int
    size: int

    def truncate(self, arr):
        """Cut a padded convolution back to the original output domain."""
        return arr[: self.n + self.m + 1]


def pad_to_common_pow2(f, g):
    """Extend both sequences with steep linear tails to a common
    power-of-two length, so every dyadic box of the recursion has
    power-of-two side.

    The shared tail slope exceeds any value variation in either input,
    which keeps the convex hulls on the original domains unchanged,
    preserves each sequence's hull distance exactly, and leaves the
    convolution on [0..n+m] the same as for the unpadded pair.
    """
    if f.offset or g.offset:
        raise ValueError("padding expects zero-offset sequences")
    n, m = f.top_index, g.top_index
    size = 1
    while size <= max(n, m):
        size *= 2
    step = f.span() + g.span() + 1

    def extend(seq):
        k = (size - 1) - seq.top_index
        if k == 0:
            return seq.values
        tail = seq.values[-1] + step * np.arange(1, k + 1, dtype=np.int64)
        return np.concatenate([seq.values, tail])

    fp = IntSeq(extend(f), validate=False)
    gp = IntSeq(extend(g), validate=False)
    return fp, gp, PadInfo(n=n, m=m, step=step, size=size)
