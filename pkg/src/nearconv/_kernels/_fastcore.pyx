# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure kernels.

Same signatures and bit-identical results; the witness walk does its
near-tie comparisons in 128-bit integers instead of Python ints (the
cross-multiplied numerators stay under 2**75 for in-range inputs).
"""
import numpy as np

cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cdef extern from *:
    ctypedef long long int128 "__int128_t"

INT64_INF = np.int64(2**62)
cdef int64_t _INF = 2**62


def dp_profit(weights, profits, jmax):
    """Knapsack table: best profit per weight budget 0..jmax.

    Returns (dp, take) where take[t, j] == 1 means item t is part of the
    recorded witness for budget j after processing items 0..t.
    """
    cdef const int64_t[::1] ws = np.ascontiguousarray(weights, dtype=np.int64)
    cdef const int64_t[::1] ps = np.ascontiguousarray(profits, dtype=np.int64)
    cdef Py_ssize_t m = ws.shape[0]
    cdef Py_ssize_t cap = jmax
    dp_arr = np.zeros(cap + 1, dtype=np.int64)
    take_arr = np.zeros((m, cap + 1), dtype=np.uint8)
    cdef int64_t[::1] dp = dp_arr
    cdef uint8_t[:, ::1] take = take_arr
    cdef Py_ssize_t t, j
    cdef int64_t w, p, cand
    for t in range(m):
        w = ws[t]
        p = ps[t]
        if w > cap:
            continue
        for j in range(cap, w - 1, -1):
            cand = dp[j - w] + p
            if cand > dp[j]:
                dp[j] = cand
                take[t, j] = 1
    return dp_arr, take_arr


def dp_min_weight(profits, weights, pcap):
    """Min weight reaching each exact profit 0..pcap (INT64_INF if unreachable)."""
    cdef const int64_t[::1] ps = np.ascontiguousarray(profits, dtype=np.int64)
    cdef const int64_t[::1] ws = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t m = ps.shape[0]
    cdef Py_ssize_t cap = pcap
    dp_arr = np.full(cap + 1, INT64_INF, dtype=np.int64)
    dp_arr[0] = 0
    take_arr = np.zeros((m, cap + 1), dtype=np.uint8)
    cdef int64_t[::1] dp = dp_arr
    cdef uint8_t[:, ::1] take = take_arr
    cdef Py_ssize_t t, j
    cdef int64_t p, w, cand
    for t in range(m):
        p = ps[t]
        w = ws[t]
        if p > cap:
            continue
        for j in range(cap, p - 1, -1):
            if dp[j - p] == _INF:
                continue
            cand = dp[j - p] + w
            if cand < dp[j]:
                dp[j] = cand
                take[t, j] = 1
    return dp_arr, take_arr


def minplus_brute(f, g):
    """Plain quadratic min-plus convolution."""
    cdef const int64_t[::1] fa = np.ascontiguousarray(f, dtype=np.int64)
    cdef const int64_t[::1] ga = np.ascontiguousarray(g, dtype=np.int64)
    cdef Py_ssize_t n = fa.shape[0], m = ga.shape[0]
    out_arr = np.full(n + m - 1, INT64_INF, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef int64_t v
    for i in range(n):
        v = fa[i]
        for j in range(m):
            if v + ga[j] < out[i + j]:
                out[i + j] = v + ga[j]
    return out_arr


def box_min_by_diagonal(fv, gv):
    """Per-diagonal minimum of fv[i] + gv[j] over a full box."""
    cdef const int64_t[::1] fa = np.ascontiguousarray(fv, dtype=np.int64)
    cdef const int64_t[::1] ga = np.ascontiguousarray(gv, dtype=np.int64)
    cdef Py_ssize_t n = fa.shape[0], m = ga.shape[0]
    out_arr = np.full(n + m - 1, INT64_INF, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef int64_t v
    for i in range(n):
        v = fa[i]
        for j in range(m):
            if v + ga[j] < out[i + j]:
                out[i + j] = v + ga[j]
    return out_arr


def witness_walk(f_floor, f_num, f_den, g_floor, g_num, g_den):
    """Linear-time min-plus convolution of two convex piecewise-linear
    hulls given as exact floor + num/den triples; ties break low.

    Returns (istar, h_floor, h_num, h_den); see the pure twin for the
    candidate-window argument.
    """
    cdef const int64_t[::1] ff = np.ascontiguousarray(f_floor, dtype=np.int64)
    cdef const int64_t[::1] fn = np.ascontiguousarray(f_num, dtype=np.int64)
    cdef const int64_t[::1] fd = np.ascontiguousarray(f_den, dtype=np.int64)
    cdef const int64_t[::1] gf = np.ascontiguousarray(g_floor, dtype=np.int64)
    cdef const int64_t[::1] gn = np.ascontiguousarray(g_num, dtype=np.int64)
    cdef const int64_t[::1] gd = np.ascontiguousarray(g_den, dtype=np.int64)
    cdef Py_ssize_t n = ff.shape[0] - 1
    cdef Py_ssize_t m = gf.shape[0] - 1
    cdef Py_ssize_t total = n + m + 1

    istar_arr = np.empty(total, dtype=np.int64)
    hf_arr = np.empty(total, dtype=np.int64)
    hn_arr = np.empty(total, dtype=np.int64)
    hd_arr = np.empty(total, dtype=np.int64)
    cdef int64_t[::1] istar = istar_arr
    cdef int64_t[::1] hf = hf_arr
    cdef int64_t[::1] hn = hn_arr
    cdef int64_t[::1] hd = hd_arr

    cdef Py_ssize_t prev = 0, k, lo, hi, j0, j1, j
    cdef int64_t s0, s1, b0, d0, b1, d1, fl, num, den
    cdef int128 big, t

    # emit k = 0
    istar[0] = 0
    fl = ff[0] + gf[0]
    den = fd[0] * gd[0]
    num = fn[0] * gd[0] + gn[0] * fd[0]
    if num >= den:
        num -= den
        fl += 1
    hf[0] = fl
    hn[0] = num
    hd[0] = den

    for k in range(1, total):
        lo = prev if k - prev <= m else prev + 1
        hi = prev + 1 if prev + 1 <= n else prev
        if lo != hi:
            j0 = k - lo
            j1 = k - hi
            s0 = ff[lo] + gf[j0]
            s1 = ff[hi] + gf[j1]
            if s0 + 2 <= s1:
                prev = lo
            elif s1 + 2 <= s0:
                prev = hi
            else:
                b0 = fd[lo]
                d0 = gd[j0]
                b1 = fd[hi]
                d1 = gd[j1]
                big = <int128> b0 * d0
                big = big * b1 * d1
                t = (<int128> (s0 - s1)) * big
                t = t + fn[lo] * (big // b0) + gn[j0] * (big // d0)
                t = t - fn[hi] * (big // b1) - gn[j1] * (big // d1)
                prev = lo if t <= 0 else hi
        else:
            prev = lo
        j = k - prev
        fl = ff[prev] + gf[j]
        den = fd[prev] * gd[j]
        num = fn[prev] * gd[j] + gn[j] * fd[prev]
        if num >= den:
            num -= den
            fl += 1
        istar[k] = prev
        hf[k] = fl
        hn[k] = num
        hd[k] = den
    return istar_arr, hf_arr, hn_arr, hd_arr
