"""Numba kernels for the (u, v) pair scans behind the counting operations.

All kernels take a half-open u-range [u_lo, u_hi) so scans can be
partitioned across threads; counts are exact int64 sums, so any partition
gives identical totals.  Bounds are passed pre-rooted (b <= bmax rather
than b^2 <= X) and products that could exceed int64 are compared via
integer division.
"""

from __future__ import annotations

import numba
import numpy as np
from numba import njit

SQRT2M1 = np.sqrt(2.0) - 1.0


@njit(cache=True, nogil=True)
def _gcd(a: numba.int64, b: numba.int64) -> numba.int64:
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def _isqrt(n: numba.int64) -> numba.int64:
    if n < 0:
        return -1
    r = numba.int64(np.sqrt(np.float64(n)))
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


@njit(cache=True, nogil=True)
def count_ratio(bmax: numba.int64, num: numba.int64, den: numba.int64,
                u_lo: numba.int64, u_hi: numba.int64) -> numba.int64:
    """Nontrivial triples with b <= bmax and a^2 * den <= num * b^2."""
    count = numba.int64(0)
    for u in range(u_lo, u_hi):
        uu = u * u
        if uu + 1 > bmax:
            break
        for v in range(1 + (u % 2), u, 2):
            b = uu + v * v
            if b > bmax:
                break
            if _gcd(u, v) != 1:
                continue
            a = uu - v * v - 2 * u * v
            if a < 0:
                a = -a
            if a * a * den <= num * b * b:
                count += 1
    return count


@njit(cache=True, nogil=True)
def count_max(cmax: numba.int64, u_lo: numba.int64, u_hi: numba.int64) -> numba.int64:
    """Nontrivial triples with c <= cmax."""
    count = numba.int64(0)
    for u in range(u_lo, u_hi):
        uu = u * u
        if uu - 1 + 2 * u > cmax:  # smallest c for this u is at v = 1
            break
        for v in range(1 + (u % 2), u, 2):
            c = uu - v * v + 2 * u * v
            if c > cmax:
                break
            if _gcd(u, v) != 1:
                continue
            count += 1
    return count


@njit(cache=True, nogil=True)
def count_rect(bmax: numba.int64, amax: numba.int64,
               u_lo: numba.int64, u_hi: numba.int64) -> numba.int64:
    """Nontrivial triples with a <= amax and b <= bmax."""
    count = numba.int64(0)
    for u in range(u_lo, u_hi):
        uu = u * u
        if uu + 1 > bmax:
            break
        for v in range(1 + (u % 2), u, 2):
            b = uu + v * v
            if b > bmax:
                break
            if _gcd(u, v) != 1:
                continue
            a = uu - v * v - 2 * u * v
            if a < 0:
                a = -a
            if a <= amax:
                count += 1
    return count


@njit(cache=True, nogil=True)
def count_product(x: numba.int64, u0: numba.int64,
                  u_lo: numba.int64, u_hi: numba.int64) -> numba.int64:
    """Nontrivial triples with a * b <= x.

    Dense sweep for u <= u0 ~ x^(1/4); for larger u only v near
    v0 = u (sqrt2 - 1) can give a small enough first term:
    a = (1+sqrt2)|v - v0| ((sqrt2-1)v + u) >= 2.41 |v - v0| u, so a*b <= x
    forces |v - v0| <= x / (2.41 u^3).
    """
    count = numba.int64(0)
    for u in range(u_lo, u_hi):
        uu = u * u
        if uu > x:  # a*b >= b > u^2
            break
        v_lo = numba.int64(1)
        v_hi = numba.int64(u)  # exclusive
        dense = u <= u0
        if not dense:
            v0 = numba.int64(SQRT2M1 * u)
            w = ((x // u) // u) // u // 2 + 3
            v_lo = v0 - w
            if v_lo < 1:
                v_lo = 1
            v_hi = v0 + w + 1
            if v_hi > u:
                v_hi = u
        for v in range(v_lo, v_hi):
            if (u + v) % 2 == 0:
                continue
            b = uu + v * v
            a = uu - v * v - 2 * u * v
            if a < 0:
                a = -a
            if a > x // b:
                if dense and v > numba.int64(SQRT2M1 * u) + 1:
                    break  # past the zero of a, the product only grows
                continue
            if _gcd(u, v) != 1:
                continue
            count += 1
    return count


@njit(cache=True, nogil=True)
def count_right_triangles(hyp_max: numba.int64, tan_w: numba.float64,
                          u_lo: numba.int64, u_hi: numba.int64) -> numba.int64:
    """Primitive right triangles with hypotenuse b = u^2 + v^2 <= hyp_max and
    acute angles within omega of pi/4; the angle condition is
    a <= tan(omega) * c with a = |u^2 - v^2 - 2uv|, c = u^2 - v^2 + 2uv."""
    count = numba.int64(0)
    for u in range(u_lo, u_hi):
        uu = u * u
        if uu + 1 > hyp_max:
            break
        v_cap = _isqrt(hyp_max - uu)
        if v_cap > u - 1:
            v_cap = u - 1
        v_lo = numba.int64(1)
        v_hi = v_cap
        if tan_w < 0.55:
            # a >= 2.41 |v - v0| u while a <= tan_w * c <= 2.83 tan_w u^2
            w = numba.int64(2.9 * tan_w * u) + 3
            v0 = numba.int64(SQRT2M1 * u)
            v_lo = v0 - w
            if v_lo < 1:
                v_lo = 1
            if v0 + w < v_hi:
                v_hi = v0 + w
        for v in range(v_lo, v_hi + 1):
            if (u + v) % 2 == 0:
                continue
            a = uu - v * v - 2 * u * v
            if a < 0:
                a = -a
            c = uu - v * v + 2 * u * v
            if np.float64(a) > tan_w * np.float64(c):
                continue
            if _gcd(u, v) != 1:
                continue
            count += 1
    return count


@njit(cache=True, nogil=True)
def oracle_count(region_kind: numba.int64, x: numba.int64, y: numba.int64,
                 num: numba.int64, den: numba.int64,
                 b_hi: numba.int64) -> numba.int64:
    """Brute-force oracle: scan b then a < b directly, testing 2b^2 - a^2.

    region_kind: 0 ratio (num/den), 1 max, 2 rect (y first-term bound),
    3 product.  Counts nontrivial triples only.
    """
    count = numba.int64(0)
    for b in range(1, b_hi + 1):
        bb = b * b
        for a in range(1, b):
            t = 2 * bb - a * a
            c = _isqrt(t)
            if c * c != t:
                continue
            if _gcd(a, b) != 1:
                continue
            if region_kind == 0:
                if bb <= x and a * a * den <= num * bb:
                    count += 1
            elif region_kind == 1:
                if c * c <= x:
                    count += 1
            elif region_kind == 2:
                if a * a <= y and bb <= x:
                    count += 1
            else:
                if a * b <= x:
                    count += 1
    return count
