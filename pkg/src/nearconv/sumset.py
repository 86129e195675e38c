"""Per-diagonal minima over a box whose values hug a common line.

A Case-3 box comes with a certificate: both functions stay within
2*Delta of parallel lines F and G (slope a, computed from the hull
secant over the box). Then f(i)+g(j) = a*(i+j) + const +- 4*Delta, so
each output diagonal carries O(Delta) distinct values and the whole
box reduces to one small Boolean convolution.

Exactness is the delicate part. Values are doubled so that the true
sum 2f(i)+2g(j) is always even; the packed residual determines it up
to +-1, and snapping to the even candidate removes the ambiguity that
plain floor bookkeeping would leave. All line floors are computed with
integer arithmetic (no float rounding anywhere on the value path).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import fft as sfft

from . import _kernels as kernels

TOP = int(kernels.INT64_INF)

# Below this packed length the quadratic kernel beats the transform.
_DIRECT_CONV_CAP = 1 << 13


class BandViolation(RuntimeError):
    """Residuals left the window promised by the near-linearity bound."""


def floor_linear(base, slope, count):
    """floor(base + slope*t) for t = 0..count-1, as an int64 array.

    Exact for Fraction inputs. Small common denominators take a
    vectorized path: with P/R + (Q/R)*t and P = P0*R + P1 (likewise Q),
    floor((P + Q*t)/R) = P0 + Q0*t + (P1 + Q1*t)//R, and the guards
    below ensure no int64 intermediate can overflow. Anything larger
    falls back to per-index big-int evaluation.
    """
    b = Fraction(base)
    a = Fraction(slope)
    r = (b.denominator * a.denominator) // math.gcd(
        b.denominator, a.denominator
    )
    p = b.numerator * (r // b.denominator)
    q = a.numerator * (r // a.denominator)
    p0, p1 = divmod(p, r)
    q0, q1 = divmod(q, r)
    if (
        r <= 1 << 42
        and abs(p0) < 1 << 61
        and abs(q0) * count < 1 << 61
        and p1 + q1 * count < 1 << 62
    ):
        t = np.arange(count, dtype=np.int64)
        return p0 + q0 * t + (p1 + q1 * t) // r
    return np.array([(p + q * t) // r for t in range(count)], dtype=np.int64)


@dataclass(frozen=True)
class BoxLines:
    """Exact floors of the doubled reference lines over one box.

    slope2 is 2a. floor2f[i-i_a] = floor(2F(i)), floor2g[j-j_a] =
    floor(2G(j)), floor2s[k-(i_a+j_a)] = floor(2F+2G along diagonal k).
    """

    slope2: Fraction
    f_at_ia2: Fraction
    g_at_ja2: Fraction
    floor2f: np.ndarray
    floor2g: np.ndarray
    floor2s: np.ndarray


def box_lines(bf_a, bf_b, bh_mid, delta, i_a, i_b, j_a, j_b):
    """Reference lines for the box I x J.

    bf_a, bf_b: hull of f at i_a and i_b. bh_mid: hull convolution at
    the shared corner diagonal i_a + j_b. All Fractions. F is the hull
    secant over I; G shares its slope, placed so that F+G sits 2*Delta
    above the hull convolution at the corner diagonal, which centers
    both residual windows per the near-linearity bound.
    """
    s = i_b - i_a + 1
    if s < 2 or (j_b - j_a + 1) != s:
        raise ValueError("box must be square with side >= 2")
    fa = Fraction(bf_a)
    fb = Fraction(bf_b)
    slope2 = Fraction(2 * (fb - fa), s - 1)
    f_at_ia2 = 2 * fa
    diag_mid2 = 2 * Fraction(bh_mid) + 2 * Fraction(delta)  # 2(F+G) at i_a+j_b
    g_at_jb2 = diag_mid2 - f_at_ia2
    g_at_ja2 = g_at_jb2 - slope2 * (s - 1)
    floor2f = floor_linear(f_at_ia2, slope2, s)
    floor2g = floor_linear(g_at_ja2, slope2, s)
    floor2s = floor_linear(diag_mid2 - slope2 * (s - 1), slope2, 2 * s - 1)
    return BoxLines(slope2, f_at_ia2, g_at_ja2, floor2f, floor2g, floor2s)


@dataclass(frozen=True)
class SumsetResult:
    values: np.ndarray  # min of f(i)+g(j) per diagonal, relative to i_a+j_a
    method: str
    decoded_size: int | None = None  # distinct decoded points (transform only)
    width_f: int | None = None
    width_g: int | None = None


def merge_threshold(ceil_delta):
    """Box side below which the quadratic kernel is the right tool.

    The packed transform costs ~(side + 32*Delta) per diagonal, so for
    sides up to a small multiple of Delta the plain per-diagonal merge
    is both simpler and faster, and it keeps the same O(Delta*s) bill.
    """
    return 4 * (16 * ceil_delta + 8)


def banded_sumset_min(fv, gv, lines, ceil_delta, method="auto", fft_cap=1 << 25):
    """Exact per-diagonal min of f(i)+g(j) over a certified box.

    fv, gv: the actual (not hull) values over I and J. lines: see
    box_lines; may be None for the merge method. Returns a SumsetResult
    whose values[d] covers diagonal i_a + j_a + d.

    Raises BandViolation if a residual falls outside the theoretical
    window, which would mean the certificate (corner relevance) was
    wrong; nothing is silently clipped.
    """
    f = np.asarray(fv, dtype=np.int64)
    g = np.asarray(gv, dtype=np.int64)
    s = len(f)
    if len(g) != s:
        raise ValueError("box must be square")
    if method == "auto":
        method = "merge" if s <= merge_threshold(ceil_delta) else "transform"
    if s == 1 or method == "merge":
        vals = kernels.box_min_by_diagonal(f, g)
        return SumsetResult(np.asarray(vals), "merge")

    sigma_f = 2 * f - lines.floor2f
    sigma_g = 2 * g - lines.floor2g
    fmin, fmax = int(sigma_f.min()), int(sigma_f.max())
    gmin, gmax = int(sigma_g.min()), int(sigma_g.max())
    width_f = fmax - fmin
    width_g = gmax - gmin
    # near-linearity: |2f - 2F| <= 8*Delta, plus one unit lost to floor
    cap = 8 * ceil_delta + 2
    if width_f > cap or width_g > cap:
        raise BandViolation(
            f"residual widths ({width_f}, {width_g}) exceed {cap}"
        )
    stride = width_f + width_g + 1
    sf = sigma_f - fmin
    sg = sigma_g - gmin
    base = fmin + gmin

    res = np.full(2 * s - 1, TOP, dtype=np.int64)
    decoded = 0

    def pack_range(f_lo, f_hi, g_lo, g_hi):
        # sub-boxes of a certified box keep the certificate (same lines)
        nonlocal decoded
        nf = f_hi - f_lo
        ng = g_hi - g_lo
        len_f = (nf - 1) * stride + int(sf[f_lo:f_hi].max()) + 1
        len_g = (ng - 1) * stride + int(sg[g_lo:g_hi].max()) + 1
        if len_f + len_g > fft_cap and nf >= 2:
            hf, hg = nf // 2, ng // 2
            pack_range(f_lo, f_lo + hf, g_lo, g_lo + hg)
            pack_range(f_lo, f_lo + hf, g_lo + hg, g_hi)
            pack_range(f_lo + hf, f_hi, g_lo, g_lo + hg)
            pack_range(f_lo + hf, f_hi, g_lo + hg, g_hi)
            return
        bits_f = np.zeros(len_f)
        bits_f[
            np.arange(nf, dtype=np.int64) * stride + sf[f_lo:f_hi]
        ] = 1.0
        bits_g = np.zeros(len_g)
        bits_g[
            np.arange(ng, dtype=np.int64) * stride + sg[g_lo:g_hi]
        ] = 1.0
        total = len_f + len_g - 1
        if total <= _DIRECT_CONV_CAP:
            conv = np.convolve(bits_f.astype(np.int64), bits_g.astype(np.int64))
            pos = np.nonzero(conv)[0]
        else:
            nfast = sfft.next_fast_len(total, real=True)
            conv = sfft.irfft(
                sfft.rfft(bits_f, nfast) * sfft.rfft(bits_g, nfast), nfast
            )
            pos = np.nonzero(conv[:total] >= 0.5)[0]
        d, rem = np.divmod(pos, stride)
        d += f_lo + g_lo  # global diagonal offset within the box
        v2 = rem + base + lines.floor2s[d]
        v2 -= v2 & 1  # the true doubled sum is the even candidate
        # within a diagonal the decoded values are nondecreasing, so the
        # first position per diagonal is the minimum
        first = np.ones(len(d), dtype=bool)
        first[1:] = d[1:] != d[:-1]
        np.minimum.at(res, d[first], v2[first] >> 1)
        decoded += len(np.unique(d * (stride + 2) + (v2 - lines.floor2s[d] - base + 1)))

    pack_range(0, s, 0, s)
    if int(res.max()) >= TOP:
        raise AssertionError("sumset left a diagonal uncovered")
    return SumsetResult(res, "transform", decoded, width_f, width_g)
