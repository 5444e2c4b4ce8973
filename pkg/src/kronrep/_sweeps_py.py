"""Pure-Python scan kernels (arbitrary precision).

Mirrors _sweeps_c exactly: same hypothesis sets, same lexicographic
iteration order, same first-counterexample semantics.  Python integers
make these loops exact at any range, at the cost of speed; the compiled
backend is preferred whenever the range fits 64-bit intermediates.
"""

from __future__ import annotations

from math import isqrt


def distance_counterexample(r: int, a_max: int) -> tuple[int, int] | None:
    """First (a,b) with 1 <= a <= b <= a*L_r and q(a,b)+b-a <= 0 but
    a*L_r - b < 1/2, or None.

    The conclusion is decided in integers: a*L_r - b >= 1/2 is equivalent
    to 2b + 1 - a*r <= 0 or (2b + 1 - a*r)^2 <= a^2 (r^2 - 4).
    """
    dd = r * r - 4
    for a in range(1, a_max + 1):
        aa = a * a * dd
        t = isqrt(aa)
        b_hi = (a * r + t) // 2  # floor(a * L_r)
        for b in range(a, b_hi + 1):
            if a * a + b * b - r * a * b + b - a <= 0:
                rhs = 2 * b + 1 - a * r
                if rhs > 0 and aa < rhs * rhs:
                    return (a, b)
    return None


def maximality_counterexample(r: int, bound: int) -> tuple[int, int] | None:
    """First imaginary (a,b) with coordinates <= bound and
    q(a,b) + |a-b| >= 1 such that neither b = floor(a*L_r) nor
    a = floor(b*L_r), or None."""
    dd = r * r - 4
    for a in range(1, bound + 1):
        aa = a * a * dd
        t = isqrt(aa)
        hi = (a * r + t) // 2
        lo = (a * r - t - 1) // 2 + 1  # ceil(a / L_r); q(a,b) <= 0 iff lo <= b <= hi
        for b in range(max(lo, 1), min(hi, bound) + 1):
            q = a * a + b * b - r * a * b
            gap = a - b if a > b else b - a
            if q + gap >= 1 and b != hi:
                tb = isqrt(b * b * dd)
                if a != (b * r + tb) // 2:
                    return (a, b)
    return None


def bump_counterexample(r: int, bound: int) -> tuple[int, int] | None:
    """First imaginary (u,v) with coordinates <= bound and u >= v + r - 1
    whose inverse Coxeter image shifted by (0,1) is not imaginary, or None."""
    dd = r * r - 4
    for v in range(1, bound + 1):
        tv = isqrt(v * v * dd)
        u_hi = (v * r + tv) // 2  # q(u,v) <= 0 iff u <= v*L_r here, since u > v
        for u in range(v + r - 1, min(u_hi, bound) + 1):
            x = r * v - u
            y = (r * r - 1) * v - r * u + 1
            if x < 1 or y < 1 or x * x + y * y - r * x * y > 0:
                return (u, v)
    return None
