"""Small exact dense linear algebra over prime fields and the rationals.

Matrices are row-major lists of lists; prime-field entries are canonical
residues 0..p-1, rational entries are fractions.  Sizes here are tiny
(hom systems on desk-scale representations), so plain Gaussian
elimination is all that is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Prime field F_p (p prime below 2^31) or the rationals (p=None)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not (2 <= self.p < 2**31 and is_prime(self.p)):
            raise ValueError(f"field order must be a prime below 2**31, got {self.p!r}")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def label(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"

    def coerce(self, x):
        if self.p is None:
            return Fraction(x)
        return int(x) % self.p

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def add(self, x, y):
        return (x + y) % self.p if self.p is not None else x + y

    def sub(self, x, y):
        return (x - y) % self.p if self.p is not None else x - y

    def mul(self, x, y):
        return (x * y) % self.p if self.p is not None else x * y

    def neg(self, x):
        return (-x) % self.p if self.p is not None else -x

    def inv(self, x):
        if self.p is None:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / Fraction(x)
        xi = x % self.p
        if xi == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(xi, self.p - 2, self.p)


def zeros(rows: int, cols: int, fld: FieldSpec) -> Matrix:
    z = fld.zero
    return [[z] * cols for _ in range(rows)]


def identity(n: int, fld: FieldSpec) -> Matrix:
    m = zeros(n, n, fld)
    for i in range(n):
        m[i][i] = fld.one
    return m


def mat_mul(a: Matrix, b: Matrix, fld: FieldSpec) -> Matrix:
    rows = len(a)
    if rows == 0:
        return []
    inner = len(a[0])
    if inner != len(b):
        raise ValueError(f"shape mismatch: {rows}x{inner} times {len(b)}x?")
    if inner == 0:
        # m x 0 times 0 x n: the column count cannot be recovered from b,
        # so degenerate products are the caller's business
        raise ValueError("empty inner dimension; handle degenerate shapes at the call site")
    cols = len(b[0])
    out = zeros(rows, cols, fld)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v == 0:
                continue
            bk = b[k]
            for j in range(cols):
                oi[j] = fld.add(oi[j], fld.mul(v, bk[j]))
    return out


def lin_comb(mats: list[Matrix], coeffs: list, fld: FieldSpec) -> Matrix:
    """Sum of coeff_i * mats_i; all matrices share one shape."""
    if not mats:
        raise ValueError("need at least one matrix")
    rows = len(mats[0])
    cols = len(mats[0][0]) if rows else 0
    out = zeros(rows, cols, fld)
    for m, c in zip(mats, coeffs):
        if c == 0:
            continue
        for i in range(rows):
            mi = m[i]
            oi = out[i]
            for j in range(cols):
                oi[j] = fld.add(oi[j], fld.mul(c, mi[j]))
    return out


def rank(mat: Matrix, fld: FieldSpec) -> int:
    rows = len(mat)
    if rows == 0:
        return 0
    cols = len(mat[0])
    m = [row[:] for row in mat]
    rk = 0
    for c in range(cols):
        piv = next((i for i in range(rk, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = fld.inv(m[rk][c])
        m[rk] = [fld.mul(v, inv) for v in m[rk]]
        lead = m[rk]
        for i in range(rk + 1, rows):
            f = m[i][c]
            if f != 0:
                m[i] = [fld.sub(v, fld.mul(f, w)) for v, w in zip(m[i], lead)]
        rk += 1
        if rk == rows:
            break
    return rk


def mat_inv(mat: Matrix, fld: FieldSpec) -> Matrix | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    m = [row[:] + ident_row for row, ident_row in zip(mat, identity(n, fld))]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = fld.inv(m[c][c])
        m[c] = [fld.mul(v, inv) for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [fld.sub(v, fld.mul(f, w)) for v, w in zip(m[i], m[c])]
    return [row[n:] for row in m]


def mat_vec(mat: Matrix, vec: list, fld: FieldSpec) -> list:
    out = []
    for row in mat:
        s = fld.zero
        for v, x in zip(row, vec):
            s = fld.add(s, fld.mul(v, x))
        out.append(s)
    return out


def tuplify(mat: Matrix) -> tuple:
    return tuple(tuple(row) for row in mat)


def listify(mat) -> Matrix:
    return [list(row) for row in mat]
