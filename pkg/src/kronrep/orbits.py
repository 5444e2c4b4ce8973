"""Coxeter-orbit analysis of imaginary roots.

Inside each orbit the equal-images vectors form the strict forward tail
of a unique boundary element delta_o, and the equal-kernels vectors the
backward tail starting m_o inverse steps behind it.  This module walks
orbits to locate (delta_o, m_o), derives the component width bound, and
checks the exact growth-sequence identities behind those walks in
Q(sqrt(r^2-4)).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kronecker as kr
from .exactnum import QuadNum, lr
from .kronecker import DimVec

DEFAULT_STEP_CAP = 10**6


class OrbitSearchError(RuntimeError):
    """An orbit walk exceeded its step cap."""


def _require_imaginary(r: int, d: DimVec) -> None:
    if kr.classify(r, d) is not kr.RootClass.IMAGINARY:
        raise ValueError(f"{d} is not an imaginary root for r={r}")


def orbit_window(r: int, seed: DimVec, back: int, fwd: int) -> list[DimVec]:
    """[Phi^-back(seed), ..., seed, ..., Phi^fwd(seed)], exact integers."""
    _require_imaginary(r, seed)
    if back < 0 or fwd < 0:
        raise ValueError("window extents must be nonnegative")
    window = [seed]
    d = seed
    for _ in range(back):
        d = kr.coxeter_inv(r, d)
        window.insert(0, d)
    d = seed
    for _ in range(fwd):
        d = kr.coxeter(r, d)
        window.append(d)
    return window


def find_delta_and_m(r: int, seed: DimVec, step_cap: int = DEFAULT_STEP_CAP) -> tuple[DimVec, int]:
    """Boundary element and equal-kernels offset of the orbit through seed.

    delta_o is the unique orbit element without the equal-images property
    whose image under the Coxeter matrix has it; m_o is the least l >= 0
    such that l inverse steps from delta_o land in the equal-kernels set.
    Both are orbit invariants, so any imaginary seed of the orbit gives
    the same answer.
    """
    _require_imaginary(r, seed)
    if r < 3:
        raise ValueError("orbit boundaries exist only for r >= 3")

    d = seed
    if kr.eip_dim(r, d):
        # walk backwards until the equal-images flag drops
        for _ in range(step_cap):
            prev = kr.coxeter_inv(r, d)
            if not kr.eip_dim(r, prev):
                delta = prev
                break
            d = prev
        else:
            raise OrbitSearchError(f"no boundary within {step_cap} steps of {seed}")
    else:
        for _ in range(step_cap):
            nxt = kr.coxeter(r, d)
            if kr.eip_dim(r, nxt):
                delta = d
                break
            d = nxt
        else:
            raise OrbitSearchError(f"no boundary within {step_cap} steps of {seed}")

    m = 0
    d = delta
    while not kr.ekp_dim(r, d):
        d = kr.coxeter_inv(r, d)
        m += 1
        if m > step_cap:
            raise OrbitSearchError(f"no equal-kernels element within {step_cap} steps of {delta}")
    return delta, m


def w_bound(r: int, dim: DimVec, ql: int, step_cap: int = DEFAULT_STEP_CAP) -> int:
    """Width bound m_o - ql + 1 for a regular component through dim at
    quasi-length ql.  May be negative for large ql; returned as computed."""
    if ql < 1:
        raise ValueError("quasi-length must be >= 1")
    _, m = find_delta_and_m(r, dim, step_cap)
    return m - ql + 1


@dataclass(frozen=True)
class OrbitEntry:
    offset: int
    dim: DimVec
    ekp: bool
    eip: bool


@dataclass(frozen=True)
class OrbitReport:
    r: int
    seed: DimVec
    q_value: int
    delta_o: DimVec
    m_o: int
    window: tuple[OrbitEntry, ...]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "seed": list(self.seed),
            "q": self.q_value,
            "delta_o": list(self.delta_o),
            "m_o": self.m_o,
            "window": [
                {"offset": e.offset, "dim": list(e.dim), "ekp": e.ekp, "eip": e.eip}
                for e in self.window
            ],
        }


def orbit_report(
    r: int,
    seed: DimVec,
    back: int = 3,
    fwd: int = 3,
    step_cap: int = DEFAULT_STEP_CAP,
) -> OrbitReport:
    window = orbit_window(r, seed, back, fwd)
    delta, m = find_delta_and_m(r, seed, step_cap)
    entries = tuple(
        OrbitEntry(offset, d, kr.ekp_dim(r, d), kr.eip_dim(r, d))
        for offset, d in zip(range(-back, fwd + 1), window)
    )
    return OrbitReport(r, seed, kr.q_r(r, seed), delta, m, entries)


# -- the growth sequence and its exact identities ---------------------------


def a_seq(r: int, n: int) -> list[int]:
    """First n values of a(1)=1, a(2)=r, a(i+2) = r*a(i+1) - a(i).

    Consecutive pairs are the projective chain dimension vectors, and the
    quotients a(l+1)/L_r^l govern how orbit partial sums approach the
    slope bound.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    vals = [1, r]
    while len(vals) < n:
        vals.append(r * vals[-1] - vals[-2])
    return vals[:n]


def verify_a_identity(r: int, l: int) -> bool:
    """a(l+1) == L_r^l - a(l)*L_r + r*a(l), exactly in Q(sqrt(r^2-4))."""
    if l < 1:
        raise ValueError("identity stated for l >= 1")
    big_l = lr(r)
    seq = a_seq(r, l + 1)
    return big_l ** l - seq[l - 1] * big_l + r * seq[l - 1] == seq[l]


def verify_a_bound(r: int, l: int) -> bool:
    """a(l) < L_r^l, decided by an exact sign."""
    if l < 1:
        raise ValueError("bound stated for l >= 1")
    return (lr(r) ** l - a_seq(r, l)[l - 1]).sign() == +1


def verify_sum_identity(r: int, a: int, b: int, l: int) -> bool:
    """Partial orbit sums against the slope bound.

    For (x,y) = sum of Phi^-i(a,b), i = 0..l, checks
    (x*L_r - y) * L_r^l == a(l+1) * (a*L_r - b) exactly; the multiplied
    through form avoids division.
    """
    _require_imaginary(r, (a, b))
    if l < 1:
        raise ValueError("identity stated for l >= 1")
    big_l = lr(r)
    x, y = a, b
    d: DimVec = (a, b)
    for _ in range(l):
        d = kr.coxeter_inv(r, d)
        x += d[0]
        y += d[1]
    lhs = (x * big_l - y) * big_l ** l
    rhs = a_seq(r, l + 1)[l] * (a * big_l - b)
    return lhs == rhs


def verify_lemma_orbit(r: int, a: int, b: int) -> bool:
    """Strictly growing coordinate gaps along an imaginary orbit.

    For a >= b the forward step satisfies the chain
    gap(Phi(a,b)) >= a - b + (r^2-2r)*a > a - b >= 0, and dually for
    a <= b under the inverse step.  Needs r >= 3; both chains are checked
    when a == b.
    """
    if r < 3:
        raise ValueError("the gap bounds assume r >= 3")
    _require_imaginary(r, (a, b))
    ok = True
    bulge = r * r - 2 * r
    if a >= b:
        u, v = kr.coxeter(r, (a, b))
        ok &= (u - v >= a - b + bulge * a) and (bulge * a > 0) and (a - b >= 0)
    if a <= b:
        u, v = kr.coxeter_inv(r, (a, b))
        ok &= (v - u >= b - a + bulge * b) and (bulge * b > 0) and (b - a >= 0)
    return bool(ok)
