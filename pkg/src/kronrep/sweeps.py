"""Backend selection for the exhaustive scan kernels.

The compiled extension (_sweeps_c, Cython) is used when it imported
successfully, the environment variable KRONREP_PURE is unset, and the
requested range keeps every intermediate inside int64.  Otherwise the
pure-Python big-integer backend runs the identical scan.  Both backends
enumerate the same hypothesis sets in the same order, so results agree
exactly; benchmarks/bench_sweeps.py compares their speed.
"""

from __future__ import annotations

import os

from . import _sweeps_py

try:
    from . import _sweeps_c  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _sweeps_c = None

_FORCE_PURE = os.environ.get("KRONREP_PURE", "") not in ("", "0")

#: backend used by default for ranges that fit int64
BACKEND = "pure" if (_sweeps_c is None or _FORCE_PURE) else "compiled"


def compiled_available() -> bool:
    return _sweeps_c is not None


def fits_int64(r: int, max_coord: int) -> bool:
    """True when every kernel intermediate for coordinates up to max_coord
    stays below 2^63.  Worst case is of order (max_coord * r^2)^2."""
    return r >= 3 and max_coord >= 0 and max_coord * r * r < 2**31


def _module(r: int, max_coord: int, backend: str | None):
    if backend not in (None, "pure", "compiled"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "compiled":
        if _sweeps_c is None:
            raise RuntimeError("compiled backend is not available")
        if not fits_int64(r, max_coord):
            raise ValueError("range too large for the compiled backend")
        return _sweeps_c
    if backend == "pure":
        return _sweeps_py
    if BACKEND == "compiled" and fits_int64(r, max_coord):
        return _sweeps_c
    return _sweeps_py


def _check_args(r: int, limit: int) -> None:
    if not isinstance(r, int) or r < 3:
        raise ValueError("scans are defined for integer r >= 3")
    if not isinstance(limit, int) or limit < 0:
        raise ValueError("range limit must be a nonnegative integer")


def distance_counterexample(r: int, a_max: int, backend: str | None = None):
    """First hypothesis point violating the slope-distance bound, or None."""
    _check_args(r, a_max)
    out = _module(r, a_max, backend).distance_counterexample(r, a_max)
    return None if out is None else (int(out[0]), int(out[1]))


def maximality_counterexample(r: int, bound: int, backend: str | None = None):
    """First imaginary vector violating the floor dichotomy, or None."""
    _check_args(r, bound)
    out = _module(r, bound, backend).maximality_counterexample(r, bound)
    return None if out is None else (int(out[0]), int(out[1]))


def bump_counterexample(r: int, bound: int, backend: str | None = None):
    """First imaginary vector violating the shifted-step closure, or None."""
    _check_args(r, bound)
    out = _module(r, bound, backend).bump_counterexample(r, bound)
    return None if out is None else (int(out[0]), int(out[1]))
