"""Numpy/pure-Python implementations of the hot kernels.

Signatures mirror the compiled extension exactly; `nearconv.kernels`
picks one backend at import time. Everything here is exact integer
arithmetic, the numpy parts never leave int64 range (callers enforce
the documented value and length caps).
"""
from __future__ import annotations

import numpy as np

INT64_INF = np.int64(2**62)


def dp_profit(weights, profits, jmax):
    """Knapsack table: best profit per weight budget 0..jmax.

    Returns (dp, take) where take[t, j] == 1 means item t is part of the
    recorded witness for budget j after processing items 0..t.
    """
    m = len(weights)
    dp = np.zeros(jmax + 1, dtype=np.int64)
    take = np.zeros((m, jmax + 1), dtype=np.uint8)
    for t in range(m):
        w = int(weights[t])
        p = int(profits[t])
        if w > jmax:
            continue
        cand = dp[: jmax + 1 - w] + p
        better = cand > dp[w:]
        np.copyto(dp[w:], cand, where=better)
        take[t, w:] = better
    return dp, take


def dp_min_weight(profits, weights, pcap):
    """Min weight reaching each exact profit 0..pcap (INT64_INF if unreachable)."""
    m = len(profits)
    dp = np.full(pcap + 1, INT64_INF, dtype=np.int64)
    dp[0] = 0
    take = np.zeros((m, pcap + 1), dtype=np.uint8)
    for t in range(m):
        p = int(profits[t])
        w = int(weights[t])
        if p > pcap:
            continue
        cand = dp[: pcap + 1 - p] + w
        better = cand < dp[p:]
        np.copyto(dp[p:], cand, where=better)
        take[t, p:] = better
    return dp, take


def minplus_brute(f, g):
    """Plain quadratic min-plus convolution, shift-and-minimize form."""
    n, m = len(f), len(g)
    out = np.full(n + m - 1, INT64_INF, dtype=np.int64)
    if n >= m:
        for j in range(m):
            seg = out[j : j + n]
            np.minimum(seg, f + g[j], out=seg)
    else:
        for i in range(n):
            seg = out[i : i + m]
            np.minimum(seg, g + f[i], out=seg)
    return out


def box_min_by_diagonal(fv, gv):
    """Per-diagonal minimum of fv[i] + gv[j] over a full box.

    Same contract as minplus_brute but kept as separate code: the
    convolution engine uses this for small boxes while minplus_brute
    backs the reference oracle.
    """
    n, m = len(fv), len(gv)
    out = np.full(n + m - 1, INT64_INF, dtype=np.int64)
    if m >= n:
        for i in range(n):
            seg = out[i : i + m]
            np.minimum(seg, gv + fv[i], out=seg)
    else:
        for j in range(m):
            seg = out[j : j + n]
            np.minimum(seg, fv + gv[j], out=seg)
    return out


def witness_walk(f_floor, f_num, f_den, g_floor, g_num, g_den):
    """Linear-time min-plus convolution of two convex piecewise-linear hulls.

    Inputs are per-index exact hull values split as floor + num/den with
    0 <= num < den. Walks the witness path: the minimizer index for
    diagonal k is within {prev, prev+1} of the one for k-1 because both
    hulls are convex. Ties break to the smaller index.

    Returns (istar, h_floor, h_num, h_den) with the same split encoding
    for the output hull values.
    """
    n = len(f_floor) - 1
    m = len(g_floor) - 1
    ff = [int(x) for x in f_floor]
    fn = [int(x) for x in f_num]
    fd = [int(x) for x in f_den]
    gf = [int(x) for x in g_floor]
    gn = [int(x) for x in g_num]
    gd = [int(x) for x in g_den]

    total = n + m + 1
    istar = np.empty(total, dtype=np.int64)
    h_floor = np.empty(total, dtype=np.int64)
    h_num = np.empty(total, dtype=np.int64)
    h_den = np.empty(total, dtype=np.int64)

    def emit(k, i):
        j = k - i
        fl = ff[i] + gf[j]
        den = fd[i] * gd[j]
        num = fn[i] * gd[j] + gn[j] * fd[i]
        if num >= den:
            num -= den
            fl += 1
        istar[k] = i
        h_floor[k] = fl
        h_num[k] = num
        h_den[k] = den

    prev = 0
    emit(0, 0)
    for k in range(1, total):
        lo = prev if k - prev <= m else prev + 1
        hi = prev + 1 if prev + 1 <= n else prev
        if lo == hi:
            prev = lo
            emit(k, prev)
            continue
        # two candidates lo < hi, both in domain
        j0, j1 = k - lo, k - hi
        s0 = ff[lo] + gf[j0]
        s1 = ff[hi] + gf[j1]
        if s0 + 2 <= s1:
            prev = lo
        elif s1 + 2 <= s0:
            prev = hi
        else:
            # integer parts within 1 of each other: exact fractional compare
            b0, d0 = fd[lo], gd[j0]
            b1, d1 = fd[hi], gd[j1]
            big = b0 * d0 * b1 * d1
            t = (s0 - s1) * big
            t += fn[lo] * (big // b0) + gn[j0] * (big // d0)
            t -= fn[hi] * (big // b1) + gn[j1] * (big // d1)
            prev = lo if t <= 0 else hi
        emit(k, prev)
    return istar, h_floor, h_num, h_den
