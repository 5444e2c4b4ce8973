"""Closed forms for the r-arrow Kronecker quiver.

Quadratic form, root classification, Coxeter matrix dynamics,
the equal-kernels / equal-images dimension-vector predicates, the
classical necessary condition of Westwick, and the radical-layer
inequality.
"""

from __future__ import annotations

import math
from enum import Enum

from .quiver import QuiverDesc

DimVec = tuple[int, int]


class RootClass(Enum):
    NOT_ROOT = "not_root"
    REAL_PREPROJECTIVE = "real_preprojective"
    REAL_PREINJECTIVE = "real_preinjective"
    IMAGINARY = "imaginary"

    @property
    def is_root(self) -> bool:
        return self is not RootClass.NOT_ROOT

    @property
    def is_real(self) -> bool:
        return self in (RootClass.REAL_PREPROJECTIVE, RootClass.REAL_PREINJECTIVE)

    @property
    def is_imaginary(self) -> bool:
        return self is RootClass.IMAGINARY


def _check_r(r: int, minimum: int = 1) -> None:
    if not isinstance(r, int) or r < minimum:
        raise ValueError(f"arrow count r must be an integer >= {minimum}, got {r!r}")


def kronecker_quiver(r: int) -> QuiverDesc:
    """Two vertices with r parallel arrows 0 -> 1."""
    _check_r(r)
    return QuiverDesc(2, ((0, 1),) * r)


def q_r(r: int, d: DimVec) -> int:
    """Tits form d1^2 + d2^2 - r*d1*d2."""
    a, b = d
    return a * a + b * b - r * a * b


def classify(r: int, d: DimVec) -> RootClass:
    """Root class of a vector.

    Real roots are exactly the solutions of q = 1, split by the sign of
    d2 - d1 (projective chains ascend, injective chains descend).  Vectors
    with q <= 0 and both coordinates positive are imaginary, hence regular.
    Everything else, including the zero vector, is not a root.
    """
    _check_r(r)
    a, b = d
    if a < 0 or b < 0 or (a == 0 and b == 0):
        return RootClass.NOT_ROOT
    q = q_r(r, d)
    if q == 1:
        if a < b:
            return RootClass.REAL_PREPROJECTIVE
        if a > b:
            return RootClass.REAL_PREINJECTIVE
        # only r=1 reaches q=1 with equal coordinates, at (1,1); that module
        # is projective and injective at once, preprojective is the pick
        return RootClass.REAL_PREPROJECTIVE
    if q <= 0 and a >= 1 and b >= 1:
        return RootClass.IMAGINARY
    return RootClass.NOT_ROOT


def _require_root(r: int, d: DimVec) -> None:
    if classify(r, d) is RootClass.NOT_ROOT:
        raise ValueError(f"{d} is not a positive root for r={r}; predicate undefined")


def ekp_dim(r: int, d: DimVec) -> bool:
    """Equal kernels at the dimension-vector level: q(d) + d2 - d1 >= 1.

    Defined on positive roots only; holds exactly when every indecomposable
    of dimension d has all nonzero specializations injective.
    """
    _require_root(r, d)
    return q_r(r, d) + d[1] - d[0] >= 1


def eip_dim(r: int, d: DimVec) -> bool:
    """Equal images at the dimension-vector level: q(d) + d1 - d2 >= 1."""
    _require_root(r, d)
    return q_r(r, d) + d[0] - d[1] >= 1


def ekp_or_eip_dim(r: int, d: DimVec) -> bool:
    """The union predicate q(d) + |d1 - d2| >= 1 on positive roots."""
    _require_root(r, d)
    return q_r(r, d) + abs(d[0] - d[1]) >= 1


def westwick_necessary(r: int, d: DimVec) -> bool:
    """Necessary condition for equal kernels: d2 - d1 >= r-1 and d1*d2 != 0,
    with (0,1) as the lone exception."""
    _check_r(r)
    a, b = d
    return (b - a >= r - 1 and a * b != 0) or (a, b) == (0, 1)


def coxeter(r: int, d: DimVec) -> DimVec:
    """Coxeter matrix ((r^2-1, -r), (r, -1)) applied to a column vector."""
    a, b = d
    return ((r * r - 1) * a - r * b, r * a - b)


def coxeter_inv(r: int, d: DimVec) -> DimVec:
    """Inverse Coxeter matrix ((-1, r), (-r, r^2-1))."""
    a, b = d
    return (-a + r * b, -r * a + (r * r - 1) * b)


def proj_dim(r: int, i: int) -> DimVec:
    """Dimension vector of the i-th projective chain element.

    Seeds (0,1) and (1,r); every second step applies the inverse Coxeter
    matrix.
    """
    _check_r(r)
    if i < 1:
        raise ValueError("index must be >= 1")
    d: DimVec = (0, 1) if i % 2 == 1 else (1, r)
    for _ in range((i - 1) // 2):
        d = coxeter_inv(r, d)
    return d


def inj_dim(r: int, i: int) -> DimVec:
    """Dimension vector of the i-th injective chain element (seeds (1,0), (r,1))."""
    _check_r(r)
    if i < 1:
        raise ValueError("index must be >= 1")
    d: DimVec = (1, 0) if i % 2 == 1 else (r, 1)
    for _ in range((i - 1) // 2):
        d = coxeter(r, d)
    return d


def loewy_inequality(r: int, m0: int, m1: int, m2: int) -> bool:
    """q(m0-m1, m1-m2) + m0 - 2*m1 + m2 >= 1 for decreasing radical layers.

    When the head of a module with these radical layer dimensions is
    indecomposable, this forces the equal images property.
    """
    _check_r(r)
    if not (m0 >= m1 >= m2 >= 0):
        raise ValueError(f"radical layers must decrease: {(m0, m1, m2)}")
    return q_r(r, (m0 - m1, m1 - m2)) + m0 - 2 * m1 + m2 >= 1


# -- integer helpers around the slope bound L_r ----------------------------


def floor_lr_mult(r: int, a: int) -> int:
    """floor(a * L_r) for a >= 0, by integer square root.

    L_r = (r + sqrt(r^2-4))/2 is irrational for r >= 3, so the floor never
    sits on the boundary.
    """
    _check_r(r, 3)
    if a < 0:
        raise ValueError("a must be nonnegative")
    t = math.isqrt(a * a * (r * r - 4))
    return (a * r + t) // 2


def ceil_lr_div(r: int, a: int) -> int:
    """ceil(a / L_r) for a >= 0; a/L_r = a*(r - sqrt(r^2-4))/2."""
    _check_r(r, 3)
    if a < 0:
        raise ValueError("a must be nonnegative")
    if a == 0:
        return 0
    t = math.isqrt(a * a * (r * r - 4))
    return (a * r - t - 1) // 2 + 1


def regular_b_interval(r: int, a: int) -> tuple[int, int]:
    """Integers b with q(a,b) <= 0, as the closed interval [a/L_r, a*L_r]."""
    return ceil_lr_div(r, a), floor_lr_mult(r, a)
