"""General finite acyclic quiver engine.

Euler bilinear form, Tits quadratic form, symmetric form, simple
reflections, fundamental-domain membership and the reflection descent
that sorts nonnegative vectors into real roots, imaginary roots and
non-roots (Kac's theorem for quiver root systems).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

IntVec = tuple[int, ...]


class RootType(Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_ROOT = "not_root"


@dataclass(frozen=True)
class QuiverDesc:
    """Loop-free acyclic quiver on vertices 0..n-1.

    Arrows are (source, target) pairs; parallel arrows are allowed and
    counted with multiplicity.  The JSON interchange format uses 1-based
    vertices, the in-memory indices are 0-based.
    """

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for s, t in arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError(f"arrow ({s},{t}) out of range for {self.n} vertices")
            if s == t:
                raise ValueError(f"loop at vertex {s}")
        if self._has_cycle():
            raise ValueError("quiver must be acyclic")

    def _has_cycle(self) -> bool:
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        out = [[] for _ in range(self.n)]
        for s, t in self.arrows:
            out[s].append(t)
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen != self.n

    @cached_property
    def adjacent(self) -> tuple[tuple[int, ...], ...]:
        """Undirected neighbours of each vertex, with multiplicity."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for s, t in self.arrows:
            adj[s].append(t)
            adj[t].append(s)
        return tuple(tuple(a) for a in adj)

    @classmethod
    def from_dict(cls, data: dict) -> QuiverDesc:
        arrows = tuple((int(s) - 1, int(t) - 1) for s, t in data["arrows"])
        return cls(int(data["n"]), arrows)

    def to_dict(self) -> dict:
        return {"n": self.n, "arrows": [[s + 1, t + 1] for s, t in self.arrows]}

    @classmethod
    def load(cls, path) -> QuiverDesc:
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, sort_keys=True)
            fh.write("\n")


def _check_vec(q: QuiverDesc, x) -> tuple[int, ...]:
    vec = tuple(int(c) for c in x)
    if len(vec) != q.n:
        raise ValueError(f"vector length {len(vec)} does not match {q.n} vertices")
    return vec


def euler_form(q: QuiverDesc, x, y) -> int:
    """<x,y> = sum_i x_i y_i - sum_{arrows i->j} x_i y_j.

    On dimension vectors of representations this equals
    dim Hom - dim Ext^1.
    """
    xv = _check_vec(q, x)
    yv = _check_vec(q, y)
    total = sum(a * b for a, b in zip(xv, yv))
    total -= sum(xv[s] * yv[t] for s, t in q.arrows)
    return total


def tits_form(q: QuiverDesc, x) -> int:
    """Quadratic form q(x) = <x,x>."""
    return euler_form(q, x, x)


def symmetric_form(q: QuiverDesc, x, y) -> int:
    """Symmetrization <x,y> + <y,x>."""
    return euler_form(q, x, y) + euler_form(q, y, x)


def _simple_pairing(q: QuiverDesc, x: tuple[int, ...], i: int) -> int:
    # (x, e_i) = 2 x_i - sum over arrows touching i (no loops)
    return 2 * x[i] - sum(x[j] for j in q.adjacent[i])


def reflect(q: QuiverDesc, i: int, x) -> tuple[int, ...]:
    """Simple reflection r_i(x) = x - (x, e_i) e_i.

    Only coordinate i changes, to -x_i plus the sum of x over all
    neighbours of i counted with arrow multiplicity.
    """
    xv = _check_vec(q, x)
    if not 0 <= i < q.n:
        raise ValueError(f"vertex {i} out of range")
    out = list(xv)
    out[i] = xv[i] - _simple_pairing(q, xv, i)
    return tuple(out)


def _support_connected(q: QuiverDesc, x: tuple[int, ...]) -> bool:
    supp = {v for v in range(q.n) if x[v] != 0}
    if not supp:
        return False
    start = next(iter(supp))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in q.adjacent[v]:
            if w in supp and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == supp


def in_fundamental_domain(q: QuiverDesc, x) -> bool:
    """Nonzero x >= 0 with all simple pairings <= 0 and connected support."""
    xv = _check_vec(q, x)
    if any(c < 0 for c in xv) or all(c == 0 for c in xv):
        return False
    if any(_simple_pairing(q, xv, i) > 0 for i in range(q.n)):
        return False
    return _support_connected(q, xv)


def positive_root_type(q: QuiverDesc, x) -> RootType:
    """Classify x by reflection descent.

    Nonnegative nonzero vectors are reflected at the smallest vertex with
    positive simple pairing; each step strictly decreases the coordinate
    sum, so the walk ends at a simple root (real), in the fundamental
    domain (imaginary), or exposes x as a non-root by leaving the positive
    cone or by getting stuck on a disconnected support.
    """
    vec = _check_vec(q, x)
    if any(c < 0 for c in vec) or all(c == 0 for c in vec):
        return RootType.NOT_ROOT
    while True:
        if sum(vec) == 1:
            return RootType.REAL
        if in_fundamental_domain(q, vec):
            return RootType.IMAGINARY
        i = next((v for v in range(q.n) if _simple_pairing(q, vec, v) > 0), None)
        if i is None:
            return RootType.NOT_ROOT
        vec = reflect(q, i, vec)
        if any(c < 0 for c in vec):
            return RootType.NOT_ROOT
