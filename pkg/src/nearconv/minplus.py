"""Exact min-plus convolution of near-convex sequences.

Pipeline: pad both inputs to a power-of-two domain, take exact lower
hulls, convolve the hulls along the witness path, then recurse over
dyadic boxes of the index grid. A box entirely on one side of the
witness path with a non-relevant deciding corner cannot contain any
witness and is dropped; a box whose two shared-diagonal corners are
both relevant is near-linear and handed to the banded sumset kernel;
anything else splits in four.

The recursion is driven by three predicates (relevance and the two
path sides) evaluated with exact rational arithmetic behind an integer
fast path. Output cells are accumulated by pointwise min, so the
result is exact for arbitrary integer inputs; near-convexity only
affects speed. For inputs where the hull distance is large relative to
the lengths the quadratic kernel is cheaper and is selected instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels as kernels
from .convexconv import hull_minplus
from .hull import HullApprox
from .rational import Rational
from .seq import TOP, IndexRange, IntSeq, PadInfo, PartialSeq, negate, pad_to_common_pow2
from .sumset import BoxLines, SumsetResult, banded_sumset_min, box_lines, merge_threshold


@dataclass(frozen=True, slots=True)
class ConvolveConfig:
    """Knobs for minplus_nearconvex; defaults pick methods by cost."""

    force: str | None = None  # None | "recursive" | "brute"
    sumset_method: str = "auto"  # "auto" | "transform" | "merge"
    harvest: bool = False  # keep Case-3 box data for offline checks
    fft_cap: int = 1 << 25


DEFAULT_CONFIG = ConvolveConfig()


@dataclass(slots=True)
class HarvestedBox:
    """A Case-3 box captured from a live run, self-contained."""

    i_a: int
    i_b: int
    j_a: int
    j_b: int
    fv: np.ndarray
    gv: np.ndarray
    lines: BoxLines
    ceil_delta: int


@dataclass(slots=True)
class ConvTrace:
    """Instrumentation from one convolution run."""

    method: str
    pad: PadInfo | None = None
    ceil_delta: int | None = None
    # (side, box antidiagonal) -> count; see rec_minconv notes
    case3: dict = field(default_factory=dict)
    case4: dict = field(default_factory=dict)
    boxes: list = field(default_factory=list)
    sumset_points: int = 0


class RelevanceContext:
    """Shared read-only state for the box recursion.

    bf, bg are hulls of the padded inputs, bh their convolution along
    the witness path, two_delta = 2*max(hull distances) clamped >= 1.
    Hull values live as floor + num/den triples; predicate comparisons
    resolve on integer parts when those are conclusive and fall back to
    exact cross-multiplied arithmetic only near ties.
    """

    __slots__ = (
        "bf",
        "bg",
        "bh",
        "two_delta",
        "delta",
        "ceil_delta",
        "size",
        "_fv",
        "_gv",
        "_ff",
        "_fn",
        "_fd",
        "_gf",
        "_gn",
        "_gd",
        "_hf",
        "_hn",
        "_hd",
        "_istar",
        "_tdf",
        "_tdn",
        "_tdd",
    )

    def __init__(self, bf, bg, bh, two_delta):
        self.bf = bf
        self.bg = bg
        self.bh = bh
        self.two_delta = two_delta
        self.delta = two_delta.as_fraction() / 2
        self.ceil_delta = (two_delta / 2).ceil()
        self.size = len(bf.values)
        self._fv = bf.values.tolist()
        self._gv = bg.values.tolist()
        self._ff = bf.floors.tolist()
        self._fn = bf.nums.tolist()
        self._fd = bf.dens.tolist()
        self._gf = bg.floors.tolist()
        self._gn = bg.nums.tolist()
        self._gd = bg.dens.tolist()
        self._hf = bh.floors.tolist()
        self._hn = bh.nums.tolist()
        self._hd = bh.dens.tolist()
        self._istar = bh.istar.tolist()
        fl = two_delta.floor()
        self._tdf = fl
        frac = two_delta - Rational(fl)
        self._tdn = frac.num
        self._tdd = frac.den

    def relevant(self, i, j):
        """Exact test: hull_f(i) + hull_g(j) <= hull_h(i+j) + 2*Delta."""
        k = i + j
        w = self._ff[i] + self._gf[j] - self._hf[k] - self._tdf
        # fractional parts contribute strictly between -2 and 2
        if w >= 2:
            return False
        if w <= -2:
            return True
        fd, gd, hd, td = self._fd[i], self._gd[j], self._hd[k], self._tdd
        big = fd * gd * hd * td
        t = w * big
        t += self._fn[i] * (big // fd) + self._gn[j] * (big // gd)
        t -= self._hn[k] * (big // hd) + self._tdn * (big // td)
        return t <= 0

    def above_path(self, i, j):
        return i > self._istar[i + j]

    def below_path(self, i, j):
        return i < self._istar[i + j]

    def hull_f(self, i):
        return Fraction(self._ff[i] * self._fd[i] + self._fn[i], self._fd[i])

    def hull_conv(self, k):
        return Fraction(self._hf[k] * self._hd[k] + self._hn[k], self._hd[k])


def relevant(ctx, i, j):
    return ctx.relevant(i, j)


@dataclass(frozen=True, slots=True)
class Box:
    """A dyadic square of the padded index grid."""

    I: IndexRange
    J: IndexRange

    def __post_init__(self):
        s = len(self.I)
        if s != len(self.J) or s < 1:
            raise ValueError("box intervals must have equal positive length")
        if s & (s - 1):
            raise ValueError("box side must be a power of two")
        if self.I.lo % s or self.J.lo % s:
            raise ValueError("box must be aligned to its side")


@dataclass(slots=True)
class _RunState:
    acc: np.ndarray
    base: int  # global diagonal of acc[0]
    cfg: ConvolveConfig
    trace: ConvTrace
    ctx: RelevanceContext
    writes: int = 0


def _bump(counts, side, i_a, j_a):
    key = (side, (i_a + j_a) // side)
    counts[key] = counts.get(key, 0) + 1


def _case3_box(st, i_a, i_b, j_a, j_b):
    ctx = st.ctx
    s = i_b - i_a + 1
    _bump(st.trace.case3, s, i_a, j_a)
    if s == 1:
        k = i_a + j_a
        v = ctx._fv[i_a] + ctx._gv[j_a]
        slot = k - st.base
        if v < st.acc[slot]:
            st.acc[slot] = v
        st.writes += 1
        st.trace.sumset_points += 1
        return
    fv = ctx.bf.values[i_a : i_b + 1]
    gv = ctx.bg.values[j_a : j_b + 1]
    need_lines = st.cfg.harvest or st.cfg.sumset_method == "transform" or (
        st.cfg.sumset_method == "auto" and s > merge_threshold(ctx.ceil_delta)
    )
    lines = None
    if need_lines:
        k_mid = i_a + j_b
        lines = box_lines(
            ctx.hull_f(i_a),
            ctx.hull_f(i_b),
            ctx.hull_conv(k_mid),
            ctx.delta,
            i_a,
            i_b,
            j_a,
            j_b,
        )
    if st.cfg.harvest:
        st.trace.boxes.append(
            HarvestedBox(i_a, i_b, j_a, j_b, fv, gv, lines, ctx.ceil_delta)
        )
    result = banded_sumset_min(
        fv,
        gv,
        lines,
        ctx.ceil_delta,
        method=st.cfg.sumset_method,
        fft_cap=st.cfg.fft_cap,
    )
    lo = i_a + j_a - st.base
    seg = st.acc[lo : lo + 2 * s - 1]
    np.minimum(seg, result.values, out=seg)
    st.writes += 2 * s - 1
    st.trace.sumset_points += (
        result.decoded_size if result.decoded_size is not None else 2 * s - 1
    )


def _rec(st, i_a, i_b, j_a, j_b):
    ctx = st.ctx
    k_mid = i_a + j_b
    istar_mid = ctx._istar[k_mid]
    # Case 1: the whole box sits on the far side of the witness path
    # (larger i) and its deciding corner is not relevant.
    if i_a > istar_mid and not ctx.relevant(i_a, j_b):
        return
    # Case 2: mirror image, smaller-i side. The deciding corner for
    # both tests is (i_b, j_a); see the notes in the repo docs.
    if i_b < istar_mid and not ctx.relevant(i_b, j_a):
        return
    if ctx.relevant(i_a, j_b) and ctx.relevant(i_b, j_a):
        _case3_box(st, i_a, i_b, j_a, j_b)
        return
    s = i_b - i_a + 1
    if s == 1:
        # a unit box is on the path (relevant) or strictly on one side;
        # reaching here would mean a predicate bug
        raise AssertionError(f"unit box ({i_a},{j_a}) escaped all cases")
    _bump(st.trace.case4, s, i_a, j_a)
    h = s // 2
    _rec(st, i_a, i_a + h - 1, j_a, j_a + h - 1)
    _rec(st, i_a, i_a + h - 1, j_a + h, j_b)
    _rec(st, i_a + h, i_b, j_a, j_a + h - 1)
    _rec(st, i_a + h, i_b, j_a + h, j_b)


def rec_minconv(ctx, box, config=None):
    """Contribution of one dyadic box to the convolution.

    Returns a PartialSeq over the box's diagonal range, or None when
    the box contributes nothing (the lazy all-TOP result of the two
    drop cases).
    """
    cfg = config or DEFAULT_CONFIG
    i_a, i_b = box.I.lo, box.I.hi
    j_a, j_b = box.J.lo, box.J.hi
    if i_b >= ctx.size or j_b >= ctx.size:
        raise ValueError("box outside the padded grid")
    s = len(box.I)
    trace = ConvTrace(method="recursive", ceil_delta=ctx.ceil_delta)
    st = _RunState(
        acc=np.full(2 * s - 1, TOP, dtype=np.int64),
        base=i_a + j_a,
        cfg=cfg,
        trace=trace,
        ctx=ctx,
    )
    _rec(st, i_a, i_b, j_a, j_b)
    if st.writes == 0:
        return None
    return PartialSeq(i_a + j_a, st.acc)


def build_context(f, g):
    """Pad a pair and assemble the recursion context."""
    fp, gp, pad = pad_to_common_pow2(f, g)
    bf = HullApprox(fp.values)
    bg = HullApprox(gp.values)
    delta = bf.delta if bf.delta > bg.delta else bg.delta
    bh = hull_minplus(bf, bg)
    return RelevanceContext(bf, bg, bh, delta * 2), pad


def _recursive_minplus(f, g, cfg):
    ctx, pad = build_context(f, g)
    trace = ConvTrace(method="recursive", pad=pad, ceil_delta=ctx.ceil_delta)
    size = pad.size
    st = _RunState(
        acc=np.full(2 * size - 1, TOP, dtype=np.int64),
        base=0,
        cfg=cfg,
        trace=trace,
        ctx=ctx,
    )
    _rec(st, 0, size - 1, 0, size - 1)
    out = pad.truncate(st.acc)
    if int(out.max()) >= TOP:
        raise AssertionError("recursion left an output diagonal uncovered")
    return IntSeq(out, validate=False), trace


def _estimated_recursive_cost(n_pad, ceil_delta):
    # per-box constant work times box count O(N log N / s) summed, plus
    # O(Delta) per output cell; constants from desk measurements
    levels = max(1, int(math.log2(max(2, n_pad))))
    return 48 * n_pad * levels + 24 * n_pad * (ceil_delta + 4)


def minplus_with_trace(f, g, config=None):
    """minplus_nearconvex, also returning the run's ConvTrace."""
    cfg = config or DEFAULT_CONFIG
    nf, ng = len(f), len(g)
    off = f.offset + g.offset

    def brute():
        vals = kernels.minplus_brute(f.values, g.values)
        return IntSeq(vals, offset=off, validate=False), ConvTrace(method="brute")

    if cfg.force == "brute":
        return brute()
    if cfg.force != "recursive":
        cost_brute = nf * ng
        if cost_brute <= 1 << 22:
            return brute()
        # probe the hull distance on the unpadded inputs to pick a method
        cd = max(
            HullApprox(f.values).delta.ceil(), HullApprox(g.values).delta.ceil()
        )
        n_pad = 1
        while n_pad <= max(nf, ng) - 1:
            n_pad *= 2
        if _estimated_recursive_cost(n_pad, cd) >= cost_brute:
            return brute()
    if f.offset or g.offset:
        f = IntSeq(f.values, validate=False)
        g = IntSeq(g.values, validate=False)
    h, trace = _recursive_minplus(f, g, cfg)
    if off:
        h = IntSeq(h.values, offset=off, validate=False)
    return h, trace


def minplus_nearconvex(f, g, config=None):
    """Exact h(k) = min over i+j=k of f(i)+g(j), for any integer inputs.

    Runs in about (n+m)*Delta log time when the inputs are Delta-near
    convex, falling back to the quadratic kernel when that is cheaper.
    """
    h, _ = minplus_with_trace(f, g, config)
    return h


def maxplus_with_trace(f, g, config=None):
    h, trace = minplus_with_trace(negate(f), negate(g), config)
    return negate(h), trace


def maxplus_nearconcave(f, g, config=None):
    """Exact max-plus convolution; mirror of minplus_nearconvex."""
    h, _ = maxplus_with_trace(f, g, config)
    return h


minplus = minplus_nearconvex
maxplus = maxplus_nearconcave
