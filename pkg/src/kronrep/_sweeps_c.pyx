# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Same hypothesis sets, iteration order and first-counterexample semantics
as _sweeps_py; all intermediates fit int64 for the ranges admitted by the
dispatcher in sweeps.py.  All divisions below act on nonnegative operands,
so cdivision (truncation) agrees with floor division.
"""

from libc.math cimport sqrt


cdef long long _isqrt(long long x):
    cdef long long t
    if x < 0:
        return -1
    t = <long long> sqrt(<double> x)
    while t > 0 and t * t > x:
        t -= 1
    while (t + 1) * (t + 1) <= x:
        t += 1
    return t


def distance_counterexample(long long r, long long a_max):
    cdef long long dd = r * r - 4
    cdef long long a, b, t, b_hi, rhs, aa
    for a in range(1, a_max + 1):
        aa = a * a * dd
        t = _isqrt(aa)
        b_hi = (a * r + t) // 2
        for b in range(a, b_hi + 1):
            if a * a + b * b - r * a * b + b - a <= 0:
                rhs = 2 * b + 1 - a * r
                if rhs > 0 and aa < rhs * rhs:
                    return (a, b)
    return None


def maximality_counterexample(long long r, long long bound):
    cdef long long dd = r * r - 4
    cdef long long a, b, t, tb, hi, lo, b_lo, b_top, q, gap
    for a in range(1, bound + 1):
        t = _isqrt(a * a * dd)
        hi = (a * r + t) // 2
        lo = (a * r - t - 1) // 2 + 1
        b_lo = lo if lo > 1 else 1
        b_top = hi if hi < bound else bound
        for b in range(b_lo, b_top + 1):
            q = a * a + b * b - r * a * b
            gap = a - b if a > b else b - a
            if q + gap >= 1 and b != hi:
                tb = _isqrt(b * b * dd)
                if a != (b * r + tb) // 2:
                    return (a, b)
    return None


def bump_counterexample(long long r, long long bound):
    cdef long long dd = r * r - 4
    cdef long long u, v, tv, u_hi, u_top, x, y
    for v in range(1, bound + 1):
        tv = _isqrt(v * v * dd)
        u_hi = (v * r + tv) // 2
        u_top = u_hi if u_hi < bound else bound
        for u in range(v + r - 1, u_top + 1):
            x = r * v - u
            y = (r * r - 1) * v - r * u + 1
            if x < 1 or y < 1 or x * x + y * y - r * x * y > 0:
                return (u, v)
    return None
