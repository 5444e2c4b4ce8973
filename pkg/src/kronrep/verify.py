"""Exhaustive desk-scale verification of the arithmetic facts the package
rests on.

Every check enumerates its full hypothesis set over an explicit finite
range (recorded in the result; sampling is never silently substituted for
exhaustion) and reports the first counterexample if one exists.  The
hypothesis filters repeat the statements verbatim, inclusive bounds and
all: an off-by-one here would hide the tightness witnesses, such as the
pair (2,5) for r=3 that sits 0.237 below the slope bound yet fails the
hypothesis of the distance check.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kronecker as kr
from . import orbits, sweeps
from .kronecker import DimVec
from .quiver import QuiverDesc, tits_form


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    passed: bool
    counterexample: dict | None
    elapsed: float

    def to_dict(self) -> dict:
        # elapsed is intentionally omitted: JSON output must be byte-stable
        return {
            "name": self.name,
            "scope": self.scope,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


def _result(name: str, scope: str, cex: dict | None, t0: float) -> CheckResult:
    return CheckResult(name, scope, cex is None, cex, time.perf_counter() - t0)


def _check_r3(r: int) -> None:
    if not isinstance(r, int) or r < 3:
        raise ValueError(f"check defined for r >= 3, got {r!r}")


# -- scans backed by the kernel module --------------------------------------


def check_distance_lemma(r: int, a_max: int, backend: str | None = None) -> CheckResult:
    """If 1 <= a <= b <= a*L_r and q(a,b) + b - a <= 0 then a*L_r - b >= 1/2."""
    _check_r3(r)
    t0 = time.perf_counter()
    cex = sweeps.distance_counterexample(r, a_max, backend=backend)
    found = None if cex is None else {"a": cex[0], "b": cex[1]}
    return _result("distance", f"r={r}, a<={a_max}", found, t0)


def check_maximality_dichotomy(r: int, bound: int, backend: str | None = None) -> CheckResult:
    """Imaginary (a,b) with q + |a-b| >= 1 has b = floor(a*L_r) or a = floor(b*L_r)."""
    _check_r3(r)
    t0 = time.perf_counter()
    cex = sweeps.maximality_counterexample(r, bound, backend=backend)
    found = None if cex is None else {"a": cex[0], "b": cex[1]}
    return _result("maximality", f"r={r}, coords<={bound}", found, t0)


def check_imaginary_bump(r: int, bound: int, backend: str | None = None) -> CheckResult:
    """Imaginary (u,v) with u >= v + r - 1 keeps Phi^-1(u,v) + (0,1) imaginary."""
    _check_r3(r)
    t0 = time.perf_counter()
    cex = sweeps.bump_counterexample(r, bound, backend=backend)
    found = None if cex is None else {"u": cex[0], "v": cex[1]}
    return _result("bump", f"r={r}, coords<={bound}", found, t0)


# -- decomposition checks ----------------------------------------------------


def _part_splits(r: int, a: int, b: int, n: int):
    """All n-part splits of (a,b) into pairs with q <= 0, parts >= (1,1).

    Per first coordinate the admissible second coordinates form the closed
    interval [a_i/L_r, a_i*L_r]; the enumeration walks exactly those, so
    it is exhaustive over the hypothesis set while skipping violations
    early.  Floors are superadditive, so b - floor((a-a1)*L_r) is a sound
    lower cut for the leading part.
    """
    if a < n or b < n:  # every part needs both coordinates >= 1
        return
    if n == 1:
        if kr.q_r(r, (a, b)) <= 0:
            yield ((a, b),)
        return
    for a1 in range(1, a - (n - 1) + 1):
        lo1, hi1 = kr.regular_b_interval(r, a1)
        b1_lo = max(lo1, 1, b - kr.floor_lr_mult(r, a - a1))
        b1_hi = min(hi1, b - (n - 1))
        for b1 in range(b1_lo, b1_hi + 1):
            for tail in _part_splits(r, a - a1, b - b1, n - 1):
                yield ((a1, b1),) + tail


def check_average_lemma(r: int, a_max: int, n: int = 2) -> CheckResult:
    """Splitting (a, floor(a*L_r)) into n regular parts forces every part
    to be (a_i, floor(a_i*L_r))."""
    _check_r3(r)
    if n < 1:
        raise ValueError("need at least one part")
    t0 = time.perf_counter()
    found = None
    for a in range(1, a_max + 1):
        b = kr.floor_lr_mult(r, a)
        for parts in _part_splits(r, a, b, n):
            for ai, bi in parts:
                if bi != kr.floor_lr_mult(r, ai):
                    found = {"a": a, "b": b, "parts": [list(p) for p in parts]}
                    break
            if found:
                break
        if found:
            break
    return _result("average", f"r={r}, a<={a_max}, parts={n}", found, t0)


@dataclass(frozen=True)
class FiltrationCount:
    kind: str  # "all_ekp" | "one_bad" | "violation"
    bad_index: int | None = None


def check_filtration_count(r: int, parts: list[DimVec]) -> FiltrationCount:
    """Count the parts failing the equal-kernels inequality q + b_i - a_i >= 1.

    Hypothesis (raises ValueError when violated): every part lies in N^2
    with q <= 0, and the total (a,b) satisfies a <= b = floor(a*L_r).
    Zero failing parts is "all_ekp", one is "one_bad", more are a
    "violation" and would break the at-most-one-factor statement.
    """
    _check_r3(r)
    if not parts:
        raise ValueError("empty filtration")
    for i, (ai, bi) in enumerate(parts):
        if ai < 1 or bi < 1 or kr.q_r(r, (ai, bi)) > 0:
            raise ValueError(f"part {i} = {(ai, bi)} is not regular (need coords >= 1, q <= 0)")
    a = sum(p[0] for p in parts)
    b = sum(p[1] for p in parts)
    if not (a <= b == kr.floor_lr_mult(r, a)):
        raise ValueError(f"total {(a, b)} must satisfy a <= b = floor(a*L_r)")
    bad = [i for i, (ai, bi) in enumerate(parts) if kr.q_r(r, (ai, bi)) + bi - ai <= 0]
    if not bad:
        return FiltrationCount("all_ekp")
    if len(bad) == 1:
        return FiltrationCount("one_bad", bad[0])
    return FiltrationCount("violation")


def check_filtration_sweep(r: int, a_max: int, n: int = 2) -> CheckResult:
    """No n-part regular split of any (a, floor(a*L_r)) ever has two parts
    failing the equal-kernels inequality."""
    _check_r3(r)
    t0 = time.perf_counter()
    found = None
    for a in range(1, a_max + 1):
        b = kr.floor_lr_mult(r, a)
        for parts in _part_splits(r, a, b, n):
            if check_filtration_count(r, list(parts)).kind == "violation":
                found = {"a": a, "b": b, "parts": [list(p) for p in parts]}
                break
        if found:
            break
    return _result("filtration", f"r={r}, a<={a_max}, parts={n}", found, t0)


# -- the technical step behind the induction --------------------------------


def check_technical(r: int, a_max: int) -> CheckResult:
    """For 1 < a <= b = floor(a*L_r) with q + b - a <= 0:
    (i) a-1 <= b-(r-1); (ii) (a-1, b-(r-1)) and its Coxeter image are
    imaginary; (iii) the image (x,y) still satisfies q + y - x <= 0."""
    _check_r3(r)
    t0 = time.perf_counter()
    found = None
    for a in range(2, a_max + 1):
        b = kr.floor_lr_mult(r, a)
        if kr.q_r(r, (a, b)) + b - a > 0:
            continue
        shifted = (a - 1, b - (r - 1))
        image = kr.coxeter(r, shifted)
        ok = (
            a - 1 <= b - (r - 1)
            and kr.classify(r, shifted) is kr.RootClass.IMAGINARY
            and kr.classify(r, image) is kr.RootClass.IMAGINARY
            and kr.q_r(r, image) + image[1] - image[0] <= 0
        )
        if not ok:
            found = {"a": a, "b": b}
            break
    return _result("technical", f"r={r}, a<={a_max}", found, t0)


# -- polynomial identities ----------------------------------------------------


def check_identity_eq2(r: int, u: int, v: int) -> bool:
    """q(u-1, v-(r-1)) == q(u,v) + u(r^2-r-2) + v(2-r) + 2 - r, both sides
    computed independently.  A polynomial identity, valid for all integers."""
    lhs = kr.q_r(r, (u - 1, v - (r - 1)))
    rhs = kr.q_r(r, (u, v)) + u * (r * r - r - 2) + v * (2 - r) + 2 - r
    return lhs == rhs


def check_identity_eq3(r: int, u: int, v: int) -> bool:
    """With (x,y) the Coxeter image of (u-1, v-(r-1)):
    q(x,y) + y - x == q(u,v) + v - u."""
    x, y = kr.coxeter(r, (u - 1, v - (r - 1)))
    return kr.q_r(r, (x, y)) + y - x == kr.q_r(r, (u, v)) + v - u


def check_identity_sweep(r_values, samples: int, seed: int = 0) -> CheckResult:
    """Both shift identities on random large integer pairs per r."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    found = None
    for r in r_values:
        for _ in range(samples):
            u = rng.randint(-10**6, 10**6)
            v = rng.randint(-10**6, 10**6)
            if not (check_identity_eq2(r, u, v) and check_identity_eq3(r, u, v)):
                found = {"r": r, "u": u, "v": v}
                break
        if found:
            break
    scope = f"r in {list(r_values)}, {samples} random pairs, seed={seed}"
    return _result("eq23", scope, found, t0)


def _aux_quiver(r: int) -> QuiverDesc:
    # two Kronecker vertices plus an image-factor vertex: r-1 parallel
    # arrows 0->1, one arrow 0->2 and one arrow 2->1
    return QuiverDesc(3, ((0, 1),) * (r - 1) + ((0, 2), (2, 1)))


def check_aux_tits_identity(r: int, d1: int, d2: int, rho: int, _quiver: QuiverDesc | None = None) -> bool:
    """Tits form of the augmented three-vertex quiver at (d1, d2, rho)
    equals q(d1,d2) + (d1-rho)(d2-rho).

    rho plays the rank of a specialization, hence 0 <= rho <= min(d1,d2).
    """
    _check_r3(r)
    if not 0 <= rho <= min(d1, d2):
        raise ValueError(f"need 0 <= rho <= min(d1, d2), got rho={rho}")
    q = _quiver if _quiver is not None else _aux_quiver(r)
    lhs = tits_form(q, (d1, d2, rho))
    rhs = kr.q_r(r, (d1, d2)) + (d1 - rho) * (d2 - rho)
    return lhs == rhs


def check_aux_tits_sweep(r_values, max_val: int) -> CheckResult:
    """The augmented-quiver identity over all d1, d2 <= max_val and all
    admissible rho."""
    t0 = time.perf_counter()
    found = None
    for r in r_values:
        q = _aux_quiver(r)
        for d1 in range(max_val + 1):
            for d2 in range(max_val + 1):
                for rho in range(min(d1, d2) + 1):
                    if not check_aux_tits_identity(r, d1, d2, rho, _quiver=q):
                        found = {"r": r, "d1": d1, "d2": d2, "rho": rho}
                        break
                if found:
                    break
            if found:
                break
        if found:
            break
    return _result("auxtits", f"r in {list(r_values)}, values<={max_val}", found, t0)


# -- growth-sequence identities (delegated to orbits) ------------------------


def check_growth_identities(r_values, l_max: int) -> CheckResult:
    """verify_a_identity and verify_a_bound over a (r, l) grid."""
    t0 = time.perf_counter()
    found = None
    for r in r_values:
        for l in range(1, l_max + 1):
            if not (orbits.verify_a_identity(r, l) and orbits.verify_a_bound(r, l)):
                found = {"r": r, "l": l}
                break
        if found:
            break
    return _result("growth", f"r in {list(r_values)}, l<={l_max}", found, t0)


def sample_imaginary(r: int, rng: random.Random, a_max: int = 60) -> DimVec:
    """A random imaginary root with first coordinate <= a_max."""
    while True:
        a = rng.randint(1, a_max)
        lo, hi = kr.regular_b_interval(r, a)
        if lo <= hi:
            b = rng.randint(max(lo, 1), hi)
            if kr.classify(r, (a, b)) is kr.RootClass.IMAGINARY:
                return (a, b)


def check_orbit_sum_identity(r_values, samples: int, l_max: int, seed: int = 0) -> CheckResult:
    """verify_sum_identity on sampled imaginary roots for every l <= l_max."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    found = None
    for r in r_values:
        for _ in range(samples):
            a, b = sample_imaginary(r, rng)
            for l in range(1, l_max + 1):
                if not orbits.verify_sum_identity(r, a, b, l):
                    found = {"r": r, "a": a, "b": b, "l": l}
                    break
            if found:
                break
        if found:
            break
    scope = f"r in {list(r_values)}, {samples} seeds, l<={l_max}, seed={seed}"
    return _result("orbitsum", scope, found, t0)


# -- suite driver -------------------------------------------------------------

_RUNNERS = {
    "distance": check_distance_lemma,
    "average": check_average_lemma,
    "filtration": check_filtration_sweep,
    "technical": check_technical,
    "bump": check_imaginary_bump,
    "maximality": check_maximality_dichotomy,
    "eq23": check_identity_sweep,
    "auxtits": check_aux_tits_sweep,
    "growth": check_growth_identities,
    "orbitsum": check_orbit_sum_identity,
}

SUITE_NAMES = tuple(_RUNNERS) + ("all",)


def default_tasks(
    suites,
    r_values=None,
    a_max: int | None = None,
    bound: int | None = None,
    samples: int | None = None,
    l_max: int | None = None,
    seed: int = 0,
) -> list[tuple[str, dict]]:
    """Expand suite names into (runner name, kwargs) tasks with the
    standard acceptance-grade ranges, honoring explicit overrides."""
    names: list[str] = []
    for s in suites:
        if s == "all":
            names.extend(n for n in _RUNNERS)
        elif s in _RUNNERS:
            names.append(s)
        else:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITE_NAMES)}")
    rs = list(r_values) if r_values else None
    tasks: list[tuple[str, dict]] = []
    for name in names:
        if name == "distance":
            for r in rs or (3, 4, 5):
                tasks.append((name, {"r": r, "a_max": a_max or 10**4}))
        elif name == "average":
            for r in rs or (3, 4):
                tasks.append((name, {"r": r, "a_max": a_max or 40, "n": 2}))
        elif name == "filtration":
            for r in rs or (3,):
                tasks.append((name, {"r": r, "a_max": a_max or 30, "n": 2}))
        elif name == "technical":
            for r in rs or (3, 4, 5):
                tasks.append((name, {"r": r, "a_max": a_max or 10**3}))
        elif name in ("bump", "maximality"):
            for r in rs or (3, 4, 5):
                tasks.append((name, {"r": r, "bound": bound or 500}))
        elif name == "eq23":
            tasks.append((name, {"r_values": rs or [3, 4, 5, 6], "samples": samples or 1000, "seed": seed}))
        elif name == "auxtits":
            tasks.append((name, {"r_values": rs or [3, 4, 5, 6], "max_val": bound or 50}))
        elif name == "growth":
            tasks.append((name, {"r_values": rs or [3, 4, 5, 6], "l_max": l_max or 20}))
        elif name == "orbitsum":
            tasks.append(
                (name, {"r_values": rs or [3, 4, 5, 6], "samples": samples or 100, "l_max": l_max or 10, "seed": seed})
            )
    return tasks


def _run_task(task: tuple[str, dict]) -> CheckResult:
    name, kwargs = task
    return _RUNNERS[name](**kwargs)


def run_tasks(tasks, jobs: int = 1) -> list[CheckResult]:
    """Run tasks, optionally across processes; results keep task order."""
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks))
