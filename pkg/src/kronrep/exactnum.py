"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Values are stored as p + q*sqrt(d) with rational p, q and a fixed positive
non-square radicand d, so every sign, comparison and floor is decided by
integer arithmetic alone.  The inequalities this package settles are tight
(distances to irrational slopes below 1/2, for instance), which rules out
floating point everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = int | Fraction


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True, eq=False)
class QuadNum:
    """p + q*sqrt(d) with exact rational coefficients.

    Arithmetic between two values requires the same radicand; plain ints
    and fractions coerce into any radicand.  Instances are immutable and
    safe to share across threads.
    """

    p: Fraction
    q: Fraction
    d: int

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 2 or is_square(self.d):
            raise ValueError(f"radicand must be a non-square integer >= 2, got {self.d!r}")
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    @classmethod
    def rational(cls, value: Rational, d: int) -> QuadNum:
        return cls(Fraction(value), Fraction(0), d)

    def _coerce(self, other) -> QuadNum | None:
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum.rational(other, self.d)
        return None

    # -- ring / field operations -------------------------------------------

    def __add__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.p, -self.q, self.d)

    def __sub__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.p - o.p, self.q - o.q, self.d)

    def __rsub__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(
            self.p * o.p + self.q * o.q * self.d,
            self.p * o.q + self.q * o.p,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadNum:
        return QuadNum(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        """Field norm p^2 - q^2 d; zero exactly at zero."""
        return self.p * self.p - self.q * self.q * self.d

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadNum(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadNum:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> QuadNum:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadNum.rational(1, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- exact decisions ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sq == 0:
            return sp
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        # opposite signs: |p| against |q| sqrt(d), i.e. p^2 against q^2 d
        left = self.p * self.p
        right = self.q * self.q * self.d
        if left == right:  # impossible for non-square d, kept as a guard
            return 0
        return sp if left > right else sq

    def floor(self) -> int:
        """The unique integer n with n <= self < n+1 (floor toward -inf).

        Write the value as (a + b*sqrt(d)) / m with integers a, b and
        m > 0.  For b != 0 the radical part is irrational, so the integers
        below the value are exactly those below (a + isqrt(b^2 d)) / m
        (shifted by one for negative b), and integer floor division does
        the rest.
        """
        m = math.lcm(self.p.denominator, self.q.denominator)
        a = self.p.numerator * (m // self.p.denominator)
        b = self.q.numerator * (m // self.q.denominator)
        if b == 0:
            return a // m
        t = math.isqrt(b * b * self.d)
        if b > 0:
            return (a + t) // m
        return (a - t - 1) // m

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadNum):
            return self.d == other.d and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def _cmp_sign(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadNum with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other) -> bool:
        return self._cmp_sign(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp_sign(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp_sign(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp_sign(other) >= 0

    def __str__(self) -> str:
        return f"{self.p} + {self.q}*sqrt({self.d})"

    def __repr__(self) -> str:
        return f"QuadNum({self.p!r}, {self.q!r}, {self.d})"


def lr(r: int) -> QuadNum:
    """Dominant root (r + sqrt(r^2 - 4)) / 2 of x^2 - r*x + 1.

    Defined for r >= 3, where r^2 - 4 is a positive non-square; it bounds
    the coordinate slopes of imaginary roots of the r-arrow Kronecker
    quiver from above.
    """
    if not isinstance(r, int) or r < 3:
        raise ValueError(f"need an integer r >= 3, got {r!r}")
    return QuadNum(Fraction(r, 2), Fraction(1, 2), r * r - 4)
