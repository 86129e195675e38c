"""0-1 Knapsack solvers built on near-convex convolution.

Three algorithms share one public entry point:

* ``bellman``: the classical O(n*W) profit table, always exact.
* ``fast``: randomized divide and conquer: items are split into q
  uniform groups, each group solved by DP on a short weight window,
  windows merged pairwise with max-plus convolution of near-concave
  slices. Always returns a feasible solution whose profit equals the
  reported value; the value equals the true optimum with high
  probability (whp over the partition seed, not per call).
* ``symmetric``: same scheme on the weight-indexed array (min weight
  per profit target), preferable when weights are small and profits
  large. Uses a fractional-greedy upper bound to cap the profit axis.

Index bookkeeping: items are addressed by their position in the input
instance everywhere outside this module; normalization (dropping
overweight items) is internal and undone before returning.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as kernels
from .minplus import maxplus_nearconcave, minplus_nearconvex
from .rational import Rational, isqrt_ceil
from .seq import LENGTH_BOUND, VALUE_BOUND, IndexRange, IntSeq

_INF = int(kernels.INT64_INF)


class KnapsackInstance:
    """Items (profit, weight) plus a capacity, all positive integers."""

    __slots__ = ("items", "capacity", "profits", "weights")

    def __init__(self, items, capacity):
        items = tuple((int(p), int(w)) for p, w in items)
        if not items:
            raise ValueError("instance needs at least one item")
        capacity = int(capacity)
        if capacity < 1:
            raise ValueError("capacity must be a positive integer")
        for t, (p, w) in enumerate(items):
            if p < 1 or w < 1:
                raise ValueError(f"item {t}: profit and weight must be >= 1")
        self.items = items
        self.capacity = capacity
        self.profits = np.array([p for p, _ in items], dtype=np.int64)
        self.weights = np.array([w for _, w in items], dtype=np.int64)
        if int(self.profits.sum()) > VALUE_BOUND or int(self.weights.sum()) > VALUE_BOUND:
            raise ValueError("total profit/weight out of supported range")
        if capacity > VALUE_BOUND:
            raise ValueError("capacity out of supported range")

    @property
    def n(self):
        return len(self.items)

    @property
    def pmax(self):
        return int(self.profits.max())

    @property
    def wmax(self):
        return int(self.weights.max())

    def __repr__(self):
        return f"KnapsackInstance(n={self.n}, W={self.capacity})"


@dataclass(frozen=True, slots=True)
class KnapsackSolution:
    """A feasible subset: value and weight always match `chosen`."""

    value: int
    chosen: frozenset
    weight: int


@dataclass(frozen=True, slots=True)
class Trivial:
    solution: KnapsackSolution


@dataclass(frozen=True, slots=True)
class Normalized:
    inst: KnapsackInstance
    kept: tuple  # kept[new_index] = original index


def preprocess(raw):
    """Drop overweight items; detect the everything-fits case.

    Returns Trivial(solution) when all remaining items fit together,
    else Normalized(instance, kept-index map) with W < total weight.
    """
    W = raw.capacity
    kept = tuple(t for t, (_, w) in enumerate(raw.items) if w <= W)
    total_w = sum(raw.items[t][1] for t in kept)
    if total_w <= W:
        value = sum(raw.items[t][0] for t in kept)
        return Trivial(KnapsackSolution(value, frozenset(kept), total_w))
    inst = KnapsackInstance([raw.items[t] for t in kept], W)
    return Normalized(inst, kept)


class DpTable:
    """Profit table P[0..jmax] with stored decision bits.

    P[j] = max profit over subsets of total weight <= j; monotone
    non-decreasing. witness(j) recovers one maximizing subset.
    """

    __slots__ = ("values", "take", "weights")

    def __init__(self, values, take, weights):
        self.values = values
        self.take = take
        self.weights = weights

    def witness(self, j):
        chosen = []
        for t in range(len(self.weights) - 1, -1, -1):
            if self.take[t, j]:
                chosen.append(t)
                j -= int(self.weights[t])
        chosen.reverse()
        return chosen


def bellman_dp(items, jmax):
    """Exact DP over weight budgets 0..jmax for (profit, weight) items."""
    if jmax < 0:
        raise ValueError("jmax must be >= 0")
    items = list(items)
    profits = np.array([p for p, _ in items], dtype=np.int64)
    weights = np.array([w for _, w in items], dtype=np.int64)
    dp, take = kernels.dp_profit(weights, profits, jmax)
    return DpTable(dp, take, weights)


class MinWeightTable:
    """Min weight per exact profit 0..pcap, INT64_INF where unreachable."""

    __slots__ = ("values", "take", "profits")

    def __init__(self, values, take, profits):
        self.values = values
        self.take = take
        self.profits = profits

    def witness(self, j):
        chosen = []
        for t in range(len(self.profits) - 1, -1, -1):
            if self.take[t, j]:
                chosen.append(t)
                j -= int(self.profits[t])
        chosen.reverse()
        return chosen


def min_weight_dp(items, pcap):
    items = list(items)
    profits = np.array([p for p, _ in items], dtype=np.int64)
    weights = np.array([w for _, w in items], dtype=np.int64)
    dp, take = kernels.dp_min_weight(profits, weights, pcap)
    return MinWeightTable(dp, take, profits)


class UseFallback:
    """Marker: q < 2, the schedule degenerates; use plain DP."""

    __slots__ = ()

    def __repr__(self):
        return "UseFallback"


USE_FALLBACK = UseFallback()


@dataclass(frozen=True, slots=True)
class ScheduleParams:
    q: int
    delta: Rational  # wmax*W/q, kept exact for the square roots
    eta: int
    levels: tuple  # levels[l] = IndexRange J^l, l = 0..log2(q)


def _eta(n):
    if n < 4:
        return 11
    return math.ceil(11 * math.log2(n))


def _level_windows(q, delta, eta, axis_cap):
    """J^l = [center - half .. center + half] capped into [0..axis_cap]."""
    levels = []
    l = 0
    while (1 << l) <= q:
        scaled = delta * (1 << l)
        half = isqrt_ceil(scaled) * eta
        center = Rational(axis_cap * (1 << l), q)
        win = IndexRange.from_bounds(center - Rational(half), center + Rational(half))
        win = win.intersect(IndexRange(0, axis_cap))
        if win.empty:
            return None
        levels.append(win)
        l += 1
    return tuple(levels)


def schedule(inst):
    """Pick the group count q and the per-level weight windows.

    q is the largest power of two below both (n/pmax)^(2/3)*(W/wmax)^(1/3)
    and W/wmax. Returns USE_FALLBACK when q < 2 (which also covers the
    degenerate one-group schedule) or when the instance is too large for
    windowed sequences.
    """
    n, W = inst.n, inst.capacity
    pmax, wmax = inst.pmax, inst.wmax
    bound = min((n / pmax) ** (2 / 3) * (W / wmax) ** (1 / 3), W / wmax)
    if bound < 2 or W >= LENGTH_BOUND:
        return USE_FALLBACK
    q = 1 << (int(bound).bit_length() - 1)
    delta = Rational(wmax * W, q)
    eta = _eta(n)
    levels = _level_windows(q, delta, eta, W)
    if levels is None:
        return USE_FALLBACK
    return ScheduleParams(q, delta, eta, levels)


@dataclass(slots=True)
class LevelSlice:
    """One group's profit window at one combination level."""

    level: int
    group: int
    offset: int  # global index of values[0]
    values: np.ndarray


def _dp_solve(inst):
    table = bellman_dp(inst.items, inst.capacity)
    value = int(table.values[inst.capacity])
    chosen = table.witness(inst.capacity)
    weight = int(sum(inst.items[t][1] for t in chosen))
    return KnapsackSolution(value, frozenset(chosen), weight)


def _remap(sol, kept):
    return KnapsackSolution(
        sol.value, frozenset(kept[t] for t in sol.chosen), sol.weight
    )


def _assign_groups(n, q, seed):
    rng = random.Random(seed)
    groups = [[] for _ in range(q)]
    for t in range(n):
        groups[rng.randrange(q)].append(t)
    return groups


def _map_parallel(fn, args, threads):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, args))
    return [fn(a) for a in args]


def reconstruct(slices, base_witness, k, v):
    """Recover an item set for entry (index k, value v) of the top slice.

    Walks the combination tree: at each level scan the two child
    windows for a split i + (k-i) = k with values summing to v, then
    recurse; at level 0 delegate to base_witness(group, k, v) which
    returns (local item list, realized index). Witnesses exist by
    construction; failing to find one means the combination step wrote
    a value it cannot justify, so raise.
    """
    top = len(slices) - 1
    out = []

    def walk(level, group, k, v):
        if level == 0:
            out.extend(base_witness(group, k, v))
            return
        c1 = slices[level - 1][2 * group]
        c2 = slices[level - 1][2 * group + 1]
        lo = max(c1.offset, k - (c2.offset + len(c2.values) - 1))
        hi = min(c1.offset + len(c1.values) - 1, k - c2.offset)
        for i in range(lo, hi + 1):
            v1 = int(c1.values[i - c1.offset])
            v2 = int(c2.values[k - i - c2.offset])
            if v1 + v2 == v:
                walk(level - 1, 2 * group, i, v1)
                walk(level - 1, 2 * group + 1, k - i, v2)
                return
        raise RuntimeError(
            f"no witness for level {level} group {group} entry ({k}, {v})"
        )

    walk(top, 0, k, v)
    return out


def solve_fast(inst, seed, threads=1, value_only=False, on_slice=None):
    """Randomized group-and-merge solver, profit-indexed windows.

    Feasibility of the returned solution is checked here, optimality
    holds with high probability over `seed`. on_slice(level, group,
    offset, values) is called for every slice kept, for diagnostics.
    """
    pre = preprocess(inst)
    if isinstance(pre, Trivial):
        return pre.solution.value if value_only else pre.solution
    norm, kept = pre.inst, pre.kept
    params = schedule(norm)
    if isinstance(params, UseFallback):
        sol = _dp_solve(norm)
        return sol.value if value_only else _remap(sol, kept)
    q, levels = params.q, params.levels
    W = norm.capacity
    groups = _assign_groups(norm.n, q, seed)
    j0 = levels[0]

    def base_case(g):
        items = [norm.items[t] for t in groups[g]]
        table = bellman_dp(items, j0.hi)
        return table

    tables = _map_parallel(base_case, range(q), threads)
    slices = [[
        LevelSlice(0, g, j0.lo, tables[g].values[j0.lo : j0.hi + 1].copy())
        for g in range(q)
    ]]
    if on_slice:
        for s in slices[0]:
            on_slice(s.level, s.group, s.offset, s.values)

    for level in range(1, len(levels)):
        win = levels[level]
        prev = slices[-1]

        def combine(g, level=level, win=win, prev=prev):
            c1, c2 = prev[2 * g], prev[2 * g + 1]
            off = c1.offset + c2.offset
            top = off + len(c1.values) + len(c2.values) - 2
            lo, hi = max(win.lo, off), min(win.hi, top)
            if lo > hi:
                return None
            h = maxplus_nearconcave(
                IntSeq(c1.values, validate=False),
                IntSeq(c2.values, validate=False),
            )
            return LevelSlice(level, g, lo, h.values[lo - off : hi - off + 1])

        merged = _map_parallel(combine, range(q >> level), threads)
        if any(s is None for s in merged):
            # a window missed its children's range: solve exactly instead
            sol = _dp_solve(norm)
            return sol.value if value_only else _remap(sol, kept)
        slices.append(merged)
        if on_slice:
            for s in merged:
                on_slice(s.level, s.group, s.offset, s.values)

    top = slices[-1][0]
    k = top.offset + len(top.values) - 1  # == W: windows are capped at W
    value = int(top.values[k - top.offset])
    if value_only:
        return value

    def base_witness(g, kk, vv):
        local = tables[g].witness(kk)
        return [groups[g][t] for t in local]

    chosen_norm = reconstruct(slices, base_witness, k, value)
    weight = int(sum(norm.items[t][1] for t in chosen_norm))
    profit = int(sum(norm.items[t][0] for t in chosen_norm))
    if profit != value or weight > W:
        raise RuntimeError("reconstruction does not match reported value")
    return _remap(KnapsackSolution(value, frozenset(chosen_norm), weight), kept)


def greedy_upper_bound(inst):
    """Floor of the fractional-relaxation optimum; in [OPT, OPT+pmax]."""
    order = sorted(
        range(inst.n),
        key=lambda t: (Fraction(inst.items[t][0], inst.items[t][1]), inst.items[t][0]),
        reverse=True,
    )
    room = inst.capacity
    total = Fraction(0)
    for t in order:
        p, w = inst.items[t]
        if w <= room:
            total += p
            room -= w
        else:
            total += Fraction(p * room, w)
            break
    return math.floor(total)


def _schedule_symmetric(inst, vcap):
    n = inst.n
    pmax, wmax = inst.pmax, inst.wmax
    bound = min((n / wmax) ** (2 / 3) * (vcap / pmax) ** (1 / 3), vcap / pmax)
    if bound < 2 or vcap >= LENGTH_BOUND:
        return USE_FALLBACK
    q = 1 << (int(bound).bit_length() - 1)
    delta = Rational(pmax * vcap, q)
    eta = _eta(n)
    levels = _level_windows(q, delta, eta, vcap)
    if levels is None:
        return USE_FALLBACK
    return ScheduleParams(q, delta, eta, levels)


def solve_symmetric(inst, seed, threads=1, value_only=False, on_slice=None):
    """Weight-indexed mirror of solve_fast.

    Works on "min weight achieving profit >= j" arrays over a profit
    axis capped by the fractional-greedy bound; slices are near-convex
    and merged with min-plus. The optimum's profit lies within pmax of
    the cap, so only that tail is scanned at the end.
    """
    pre = preprocess(inst)
    if isinstance(pre, Trivial):
        return pre.solution.value if value_only else pre.solution
    norm, kept = pre.inst, pre.kept
    W = norm.capacity
    vcap = greedy_upper_bound(norm)
    params = _schedule_symmetric(norm, vcap)
    if isinstance(params, UseFallback):
        sol = _dp_solve(norm)
        return sol.value if value_only else _remap(sol, kept)
    q, levels = params.q, params.levels
    groups = _assign_groups(norm.n, q, seed)
    j0 = levels[0]

    def base_case(g):
        items = [norm.items[t] for t in groups[g]]
        table = min_weight_dp(items, j0.hi)
        suffix = np.minimum.accumulate(table.values[::-1])[::-1]
        return table, suffix

    based = _map_parallel(base_case, range(q), threads)
    tables = [b[0] for b in based]

    def finite_slice(level, g, win, values, offset):
        # trim the window to where the group can actually reach
        reach = np.nonzero(values < _INF)[0]
        if len(reach) == 0:
            return None
        hi = offset + int(reach[-1])
        lo, hi = max(win.lo, offset), min(win.hi, hi)
        if lo > hi:
            return None
        return LevelSlice(level, g, lo, values[lo - offset : hi - offset + 1])

    slices = [[]]
    for g in range(q):
        s = finite_slice(0, g, j0, based[g][1], 0)
        if s is None:
            sol = _dp_solve(norm)
            return sol.value if value_only else _remap(sol, kept)
        slices[0].append(s)
    if on_slice:
        for s in slices[0]:
            on_slice(s.level, s.group, s.offset, s.values)

    for level in range(1, len(levels)):
        win = levels[level]
        prev = slices[-1]

        def combine(g, level=level, win=win, prev=prev):
            c1, c2 = prev[2 * g], prev[2 * g + 1]
            off = c1.offset + c2.offset
            h = minplus_nearconvex(
                IntSeq(c1.values, validate=False),
                IntSeq(c2.values, validate=False),
            )
            return finite_slice(level, g, win, h.values, off)

        merged = _map_parallel(combine, range(q >> level), threads)
        if any(s is None for s in merged):
            sol = _dp_solve(norm)
            return sol.value if value_only else _remap(sol, kept)
        slices.append(merged)
        if on_slice:
            for s in merged:
                on_slice(s.level, s.group, s.offset, s.values)

    top = slices[-1][0]
    lo_scan = max(top.offset, vcap - norm.pmax)
    hi_scan = min(top.offset + len(top.values) - 1, vcap)
    best_k = None
    for i in range(hi_scan, lo_scan - 1, -1):
        if int(top.values[i - top.offset]) <= W:
            best_k = i
            break
    if best_k is None:
        sol = _dp_solve(norm)
        return sol.value if value_only else _remap(sol, kept)
    best_w = int(top.values[best_k - top.offset])

    def base_witness(g, kk, vv):
        table = tables[g]
        # the slice holds a suffix-min: find an exact profit with this weight
        for j in range(kk, len(table.values)):
            if int(table.values[j]) == vv:
                local = table.witness(j)
                return [groups[g][t] for t in local]
        raise RuntimeError(f"no exact-profit witness in group {g} at ({kk}, {vv})")

    chosen_norm = reconstruct(slices, base_witness, best_k, best_w)
    weight = int(sum(norm.items[t][1] for t in chosen_norm))
    profit = int(sum(norm.items[t][0] for t in chosen_norm))
    if weight != best_w or weight > W or profit < best_k:
        raise RuntimeError("reconstruction does not match reported entry")
    if value_only:
        return profit
    return _remap(KnapsackSolution(profit, frozenset(chosen_norm), weight), kept)


def solve(inst, algo="auto", seed=0, threads=1, value_only=False):
    """Top-level solver dispatch.

    auto compares the two running-time bounds n*wmax*pmax^(2/3) vs
    n*pmax*wmax^(2/3); they reduce to comparing wmax with pmax, ties
    prefer the profit-indexed solver.
    """
    if algo == "auto":
        algo = "fast" if inst.wmax <= inst.pmax else "symmetric"
    if algo == "fast":
        return solve_fast(inst, seed, threads=threads, value_only=value_only)
    if algo == "symmetric":
        return solve_symmetric(inst, seed, threads=threads, value_only=value_only)
    if algo == "bellman":
        pre = preprocess(inst)
        if isinstance(pre, Trivial):
            return pre.solution.value if value_only else pre.solution
        sol = _dp_solve(pre.inst)
        return sol.value if value_only else _remap(sol, pre.kept)
    raise ValueError(f"unknown algorithm {algo!r}")
