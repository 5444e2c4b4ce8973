"""Finite fragments of the r-regular bipartite tree cover.

A fragment is a colored tree with source/sink parity, a nonnegative
dimension at every vertex, and optionally a matrix on every edge.  The
module validates fragments, applies the inverse-translate dimension
shift, detects thin sink branches, converts supports to plain quivers,
and pushes fragments down to Kronecker representations by summing source
and sink blocks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction

from . import linalg, linrep
from .linalg import FieldSpec, Matrix
from .quiver import QuiverDesc


class Parity(Enum):
    SOURCE = "source"
    SINK = "sink"


class FragmentError(ValueError):
    """Invalid fragment data."""


class DimensionShiftError(ValueError):
    """The shift produced a negative dimension; the input behaves like an
    injective representation, where the shift formulas do not apply."""


@dataclass(frozen=True)
class FragmentEdge:
    src: int
    dst: int
    color: int


@dataclass(frozen=True)
class ThinBranch:
    x: int  # source
    y: int  # sink, a leaf of the support


@dataclass
class CoverFragment:
    """Tree fragment with colored edges; treated as immutable by convention."""

    r: int
    parity: dict[int, Parity]
    edges: list[FragmentEdge]
    dims: dict[int, int]
    maps: dict[tuple[int, int], Matrix] = dc_field(default_factory=dict)


def violations(frag: CoverFragment) -> list[str]:
    """All invariant violations, each as one human-readable item."""
    out: list[str] = []
    if frag.r < 2:
        out.append(f"need r >= 2, got {frag.r}")
    ids = set(frag.parity)
    for v in ids:
        if v not in frag.dims:
            out.append(f"vertex {v} has no dimension")
        elif frag.dims[v] < 0:
            out.append(f"vertex {v} has negative dimension {frag.dims[v]}")
    for v in frag.dims:
        if v not in ids:
            out.append(f"dimension given for unknown vertex {v}")

    seen_pairs = set()
    colors_at: dict[int, set[int]] = {v: set() for v in ids}
    for e in frag.edges:
        if e.src not in ids or e.dst not in ids:
            out.append(f"edge {e.src}->{e.dst} touches an unknown vertex")
            continue
        if frag.parity[e.src] is not Parity.SOURCE or frag.parity[e.dst] is not Parity.SINK:
            out.append(f"edge {e.src}->{e.dst} must run source -> sink")
        if not 1 <= e.color <= frag.r:
            out.append(f"edge {e.src}->{e.dst} has color {e.color} outside 1..{frag.r}")
        if (e.src, e.dst) in seen_pairs:
            out.append(f"parallel edge {e.src}->{e.dst}")
        seen_pairs.add((e.src, e.dst))
        for v in (e.src, e.dst):
            if e.color in colors_at.get(v, set()):
                out.append(f"vertex {v} carries color {e.color} twice")
            colors_at.setdefault(v, set()).add(e.color)

    # tree shape: connected with |edges| = |vertices| - 1
    if ids:
        if len(frag.edges) != len(ids) - 1:
            out.append(f"{len(frag.edges)} edges on {len(ids)} vertices is not a tree")
        else:
            adj: dict[int, list[int]] = {v: [] for v in ids}
            for e in frag.edges:
                if e.src in adj and e.dst in adj:
                    adj[e.src].append(e.dst)
                    adj[e.dst].append(e.src)
            start = next(iter(ids))
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen != ids:
                out.append("underlying graph is not connected")

    for key, mat in frag.maps.items():
        if key not in seen_pairs:
            out.append(f"map on missing edge {key[0]}->{key[1]}")
            continue
        src, dst = key
        rows = len(mat)
        if rows != frag.dims.get(dst, -1) or any(len(row) != frag.dims.get(src, -1) for row in mat):
            out.append(f"map on {src}->{dst} is not {frag.dims.get(dst)}x{frag.dims.get(src)}")
    return out


def validate(frag: CoverFragment) -> bool:
    """True for a valid fragment; raises FragmentError listing every
    violation otherwise."""
    problems = violations(frag)
    if problems:
        raise FragmentError("; ".join(problems))
    return True


def support(frag: CoverFragment) -> set[int]:
    return {v for v, dim in frag.dims.items() if dim > 0}


def _neighbors(frag: CoverFragment) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in frag.parity}
    for e in frag.edges:
        adj[e.src].append(e.dst)
        adj[e.dst].append(e.src)
    return adj


def has_thin_sink_branch(frag: CoverFragment) -> ThinBranch | None:
    """First (source, sink) pair, in sorted sink order, with both vertices
    one-dimensional and the sink a leaf of the support."""
    supp = support(frag)
    adj = _neighbors(frag)
    for y in sorted(supp):
        if frag.parity[y] is not Parity.SINK or frag.dims[y] != 1:
            continue
        supp_nbrs = [w for w in adj[y] if w in supp]
        if len(supp_nbrs) == 1 and frag.dims[supp_nbrs[0]] == 1:
            return ThinBranch(supp_nbrs[0], y)
    return None


def tau_inv_dim(frag: CoverFragment) -> CoverFragment:
    """Dimension function of the inverse translate.

    New source dimensions are the sums of old sink neighbours minus the
    old source dimension; new sink dimensions then subtract the old sink
    dimension from the sum of the new source neighbours.  The ambient
    tree is completed just far enough (one color ring around the support,
    then sinks around every source that came out positive) that all
    omitted vertices provably compute to zero; the zero fringe is trimmed
    afterwards.  Edge maps do not transport and are dropped.

    Raises DimensionShiftError if any computed dimension is negative,
    which signals an injective-type input.
    """
    validate(frag)
    parity = dict(frag.parity)
    edges = list(frag.edges)
    dims = dict(frag.dims)
    next_id = max(parity, default=-1) + 1

    colors_at: dict[int, set[int]] = {v: set() for v in parity}
    for e in edges:
        colors_at[e.src].add(e.color)
        colors_at[e.dst].add(e.color)

    def complete(v: int) -> None:
        nonlocal next_id
        for color in range(1, frag.r + 1):
            if color in colors_at[v]:
                continue
            w = next_id
            next_id += 1
            other = Parity.SINK if parity[v] is Parity.SOURCE else Parity.SOURCE
            parity[w] = other
            dims[w] = 0
            colors_at[w] = {color}
            colors_at[v].add(color)
            edges.append(FragmentEdge(v, w, color) if other is Parity.SINK else FragmentEdge(w, v, color))

    for v in sorted(support(frag)):
        complete(v)

    sink_nbrs: dict[int, list[int]] = {v: [] for v in parity}
    src_nbrs: dict[int, list[int]] = {v: [] for v in parity}
    for e in edges:
        sink_nbrs[e.src].append(e.dst)
        src_nbrs[e.dst].append(e.src)

    new_src: dict[int, int] = {}
    for x in sorted(v for v in parity if parity[v] is Parity.SOURCE):
        value = sum(dims[y] for y in sink_nbrs[x]) - dims[x]
        if value < 0:
            raise DimensionShiftError(f"negative dimension {value} at source {x}")
        new_src[x] = value

    for x in sorted(new_src):
        if new_src[x] > 0:
            complete(x)

    sink_nbrs = {v: [] for v in parity}
    src_nbrs = {v: [] for v in parity}
    for e in edges:
        sink_nbrs[e.src].append(e.dst)
        src_nbrs[e.dst].append(e.src)

    new_dims: dict[int, int] = dict(new_src)
    for y in sorted(v for v in parity if parity[v] is Parity.SINK):
        value = sum(new_src.get(x, 0) for x in src_nbrs[y]) - dims.get(y, 0)
        if value < 0:
            raise DimensionShiftError(f"negative dimension {value} at sink {y}")
        new_dims[y] = value

    # trim the zero fringe: repeatedly drop zero-dimensional leaves, keeping
    # internal zeros so the fragment stays a tree
    adj: dict[int, set[int]] = {v: set() for v in parity}
    for e in edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    alive = set(parity)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            degree = sum(1 for w in adj[v] if w in alive)
            if new_dims.get(v, 0) == 0 and degree <= 1:
                alive.discard(v)
                changed = True

    out = CoverFragment(
        r=frag.r,
        parity={v: parity[v] for v in sorted(alive)},
        edges=[e for e in edges if e.src in alive and e.dst in alive],
        dims={v: new_dims[v] for v in sorted(alive)},
    )
    if alive:
        validate(out)
    return out


def pushdown_dim(frag: CoverFragment) -> tuple[int, int]:
    """(sum of source dimensions, sum of sink dimensions)."""
    d1 = sum(dim for v, dim in frag.dims.items() if frag.parity[v] is Parity.SOURCE)
    d2 = sum(dim for v, dim in frag.dims.items() if frag.parity[v] is Parity.SINK)
    return d1, d2


def pushdown_rep(frag: CoverFragment, fld: FieldSpec) -> linrep.KronRep:
    """Assemble the Kronecker representation of the push-down.

    Source and sink blocks are laid out in sorted vertex order; the map of
    each color-i edge lands in the (sink row, source column) block of the
    i-th structure matrix and every other block stays zero.  A positive
    source whose color-i edge leaves the support therefore contributes a
    zero column block, which is exactly how push-downs lose injectivity
    at the boundary.
    """
    validate(frag)
    sources = sorted(v for v in frag.parity if frag.parity[v] is Parity.SOURCE)
    sinks = sorted(v for v in frag.parity if frag.parity[v] is Parity.SINK)
    col_off: dict[int, int] = {}
    pos = 0
    for v in sources:
        col_off[v] = pos
        pos += frag.dims[v]
    d1 = pos
    row_off: dict[int, int] = {}
    pos = 0
    for v in sinks:
        row_off[v] = pos
        pos += frag.dims[v]
    d2 = pos

    mats = [linalg.zeros(d2, d1, fld) for _ in range(frag.r)]
    for e in frag.edges:
        if frag.dims[e.src] == 0 or frag.dims[e.dst] == 0:
            continue
        mat = frag.maps.get((e.src, e.dst))
        if mat is None:
            raise FragmentError(f"edge {e.src}->{e.dst} has positive dimensions but no map")
        target = mats[e.color - 1]
        for i in range(frag.dims[e.dst]):
            for j in range(frag.dims[e.src]):
                target[row_off[e.dst] + i][col_off[e.src] + j] = fld.coerce(mat[i][j])
    return linrep.KronRep(frag.r, fld, (d1, d2), tuple(linalg.tuplify(m) for m in mats))


def all_edges_injective(frag: CoverFragment, fld: FieldSpec | None = None) -> bool:
    """Every edge map has full column rank (edges out of zero-dimensional
    sources pass vacuously)."""
    validate(frag)
    fld = fld or FieldSpec.rationals()
    for e in frag.edges:
        if frag.dims[e.src] == 0:
            continue
        if frag.dims[e.dst] < frag.dims[e.src]:
            return False
        mat = frag.maps.get((e.src, e.dst))
        if mat is None:
            raise FragmentError(f"edge {e.src}->{e.dst} has positive source dimension but no map")
        coerced = [[fld.coerce(v) for v in row] for row in mat]
        if linalg.rank(coerced, fld) != frag.dims[e.src]:
            return False
    return True


def support_quiver(frag: CoverFragment) -> tuple[QuiverDesc, list[int]]:
    """The support as a plain quiver, plus the vertex order used.

    The order is sorted support ids; reading dimensions along it gives the
    vector that reflection arguments act on.
    """
    order = sorted(support(frag))
    index = {v: i for i, v in enumerate(order)}
    arrows = tuple(
        (index[e.src], index[e.dst])
        for e in frag.edges
        if e.src in index and e.dst in index
    )
    return QuiverDesc(len(order), arrows), order


def dims_along(frag: CoverFragment, order: list[int]) -> tuple[int, ...]:
    return tuple(frag.dims[v] for v in order)


# -- builders -----------------------------------------------------------------


def star_fragment(r: int, center_dim: int, sink_dims) -> CoverFragment:
    """One source (id 0) with len(sink_dims) <= r sinks, colored 1, 2, ...;
    dimension level only (no edge maps)."""
    sink_dims = list(sink_dims)
    if len(sink_dims) > r:
        raise FragmentError(f"a source supports at most r = {r} sinks")
    parity = {0: Parity.SOURCE}
    dims = {0: center_dim}
    edges = []
    for i, dim in enumerate(sink_dims, start=1):
        parity[i] = Parity.SINK
        dims[i] = dim
        edges.append(FragmentEdge(0, i, i))
    frag = CoverFragment(r, parity, edges, dims)
    validate(frag)
    return frag


def thin_star(r: int, missing_color: int | None = None) -> CoverFragment:
    """Thin star with identity edge maps: the full star pushes down to the
    projective of dimension (1, r); dropping one color gives the thin test
    representation of dimension (1, r-1) for that basis direction."""
    parity = {0: Parity.SOURCE}
    dims = {0: 1}
    edges = []
    maps = {}
    vid = 1
    for color in range(1, r + 1):
        if color == missing_color:
            continue
        parity[vid] = Parity.SINK
        dims[vid] = 1
        edges.append(FragmentEdge(0, vid, color))
        maps[(0, vid)] = [[1]]
        vid += 1
    frag = CoverFragment(r, parity, edges, dims, maps)
    validate(frag)
    return frag


def single_vertex(r: int, parity: Parity, dim: int = 1) -> CoverFragment:
    frag = CoverFragment(r, {0: parity}, [], {0: dim})
    validate(frag)
    return frag


# -- JSON interchange ---------------------------------------------------------

# fragment map entries are field-agnostic: integers stay integers, anything
# else travels as a reduced "num/den" string


def _map_entry_from_json(v):
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        num, _, den = v.partition("/")
        try:
            return Fraction(int(num), int(den or "1"))
        except (ValueError, ZeroDivisionError) as exc:
            raise FragmentError(f"bad map entry {v!r}") from exc
    raise FragmentError(f"bad map entry {v!r}")


def _map_entry_to_json(v):
    f = Fraction(v)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def from_dict(data) -> CoverFragment:
    try:
        r = int(data["r"])
        parity = {}
        dims = {}
        for v in data["vertices"]:
            vid = int(v["id"])
            parity[vid] = Parity(v["parity"])
            dims[vid] = int(v["dim"])
        edges = []
        maps = {}
        for e in data["edges"]:
            src, dst, color = int(e["from"]), int(e["to"]), int(e["color"])
            edges.append(FragmentEdge(src, dst, color))
            if "map" in e and e["map"] is not None:
                maps[(src, dst)] = [[_map_entry_from_json(x) for x in row] for row in e["map"]]
    except (TypeError, KeyError, ValueError) as exc:
        raise FragmentError(f"malformed fragment data: {exc}") from exc
    frag = CoverFragment(r, parity, edges, dims, maps)
    validate(frag)
    return frag


def to_dict(frag: CoverFragment) -> dict:
    vertices = [
        {"id": v, "parity": frag.parity[v].value, "dim": frag.dims[v]}
        for v in sorted(frag.parity)
    ]
    edges = []
    for e in sorted(frag.edges, key=lambda e: (e.src, e.dst)):
        item: dict = {"from": e.src, "to": e.dst, "color": e.color}
        mat = frag.maps.get((e.src, e.dst))
        if mat is not None:
            item["map"] = [[_map_entry_to_json(x) for x in row] for row in mat]
        edges.append(item)
    return {"r": frag.r, "vertices": vertices, "edges": edges}


def load(path) -> CoverFragment:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FragmentError(f"{path}: {exc}") from exc
    return from_dict(data)


def save(frag: CoverFragment, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_dict(frag), fh, sort_keys=True)
        fh.write("\n")
