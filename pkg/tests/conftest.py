import random
from pathlib import Path

import pytest

from kronrep.cover import CoverFragment, FragmentEdge, Parity
from kronrep.linalg import FieldSpec
from kronrep.linrep import KronRep

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
QQ = FieldSpec.rationals()


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def basis_columns(i: int, k: int, rows: int = 4):
    """4x2 matrix whose columns are the i-th and k-th basis vectors."""
    return [[1 if j == i else 0, 1 if j == k else 0] for j in range(rows)]


def intro_left(field=F5) -> KronRep:
    return KronRep(3, field, (2, 4), (basis_columns(0, 1), basis_columns(1, 2), basis_columns(2, 3)))


def intro_right(field=F5) -> KronRep:
    gamma1 = [[1, 0], [0, 0], [0, 0], [0, 0]]
    return KronRep(3, field, (2, 4), (gamma1, basis_columns(1, 2), basis_columns(2, 3)))


def random_fragment(r: int, rng: random.Random, size: int, thin: bool = False,
                    force_thin_branch: bool = False, with_maps: bool = False) -> CoverFragment:
    """Random valid fragment grown as a tree with all dimensions >= 1
    (connected support).  Optionally forces a thin sink branch or attaches
    nonzero 1x1 maps (thin fragments only)."""
    parity = {0: Parity.SOURCE}
    dims = {0: 1 if thin else rng.randint(1, 3)}
    colors_at: dict[int, set[int]] = {0: set()}
    edges: list[FragmentEdge] = []
    maps: dict[tuple[int, int], list] = {}
    nid = 1

    def attach(v: int, color: int, dim: int) -> int:
        nonlocal nid
        w = nid
        nid += 1
        other = Parity.SINK if parity[v] is Parity.SOURCE else Parity.SOURCE
        parity[w] = other
        dims[w] = dim
        colors_at[v].add(color)
        colors_at[w] = {color}
        edge = FragmentEdge(v, w, color) if other is Parity.SINK else FragmentEdge(w, v, color)
        edges.append(edge)
        if with_maps:
            maps[(edge.src, edge.dst)] = [[rng.randint(1, 4)]]
        return w

    for _ in range(size - 1):
        cands = sorted(v for v in parity if len(colors_at[v]) < r)
        v = rng.choice(cands)
        free = sorted(set(range(1, r + 1)) - colors_at[v])
        attach(v, rng.choice(free), 1 if thin else rng.randint(1, 3))

    if force_thin_branch:
        cands = sorted(
            v for v in parity if parity[v] is Parity.SOURCE and len(colors_at[v]) < r
        )
        if not cands:
            raise ValueError("no free source to host a thin branch")
        v = rng.choice(cands)
        dims[v] = 1
        free = sorted(set(range(1, r + 1)) - colors_at[v])
        attach(v, free[0], 1)

    return CoverFragment(r, parity, edges, dims, maps)


@pytest.fixture
def rng():
    return random.Random(0)
