"""Concrete Kronecker-quiver representations as matrix tuples.

A representation is r matrices of shape d2 x d1 over a prime field or the
rationals.  The module covers specialization along a direction vector,
the injectivity / surjectivity scans over all directions, Hom and Ext
dimensions by solving the intertwining equations, the base-change group
action, the thin test family of dimension (1, r-1), seeded random
generation, and exhaustive small-instance enumeration up to isomorphism.

Field policy: over F_p a failing direction is a certificate that survives
every field extension, while a passing scan certifies the property over
F_p only.  Over the rationals the scan is Monte Carlo (structured plus
seeded random directions) and a pass is flagged as non-exact.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import FieldSpec, Matrix

PROJECTIVE_DIRECTION_CAP = 10**7  # p^(r-1) at most this many directions
ENUM_TUPLE_CAP = 10**6  # p^(r*d1*d2) matrix tuples
ENUM_GROUP_CAP = 10**4  # |GL_{d1}| * |GL_{d2}| group elements


class ResourceCapError(RuntimeError):
    """An enumeration would exceed its hard cap."""


class RepFormatError(ValueError):
    """Malformed representation data."""


@dataclass(frozen=True)
class KronRep:
    """r matrices of shape d2 x d1 over a common field.

    Maps are stored as nested tuples with entries already coerced
    (canonical residues over F_p, fractions over Q), so values are
    immutable and hashable.
    """

    r: int
    field: FieldSpec
    d: tuple[int, int]
    maps: tuple

    def __post_init__(self) -> None:
        if self.r < 1:
            raise RepFormatError(f"need r >= 1, got {self.r}")
        d1, d2 = self.d
        if d1 < 0 or d2 < 0:
            raise RepFormatError(f"dimensions must be nonnegative, got {self.d}")
        if len(self.maps) != self.r:
            raise RepFormatError(f"need {self.r} matrices, got {len(self.maps)}")
        coerced = []
        for k, m in enumerate(self.maps):
            rows = [tuple(self.field.coerce(v) for v in row) for row in m]
            if len(rows) != d2 or any(len(row) != d1 for row in rows):
                raise RepFormatError(f"map {k} is not {d2}x{d1}")
            coerced.append(tuple(rows))
        object.__setattr__(self, "d", (int(d1), int(d2)))
        object.__setattr__(self, "maps", tuple(coerced))

    def mat(self, i: int) -> Matrix:
        """Mutable copy of the i-th structure matrix."""
        return linalg.listify(self.maps[i])

    def mats(self) -> list[Matrix]:
        return [self.mat(i) for i in range(self.r)]


def zero_rep(r: int, d: tuple[int, int], field: FieldSpec) -> KronRep:
    d1, d2 = d
    return KronRep(r, field, d, tuple(tuple(tuple(field.zero for _ in range(d1)) for _ in range(d2)) for _ in range(r)))


def specialize(m: KronRep, alpha) -> Matrix:
    """The linear combination sum_i alpha_i * map_i, a d2 x d1 matrix."""
    coeffs = [m.field.coerce(x) for x in alpha]
    if len(coeffs) != m.r:
        raise ValueError(f"direction length {len(coeffs)} != r = {m.r}")
    return linalg.lin_comb(m.mats(), coeffs, m.field)


# -- direction scans ----------------------------------------------------------


@dataclass(frozen=True)
class DirectionScan:
    """Outcome of an all-directions rank scan.

    witness is a failing direction when holds is False.  exact is True for
    prime fields (exhaustive over projective representatives) and for any
    failure (a witness certifies itself); a rational-field pass is Monte
    Carlo and therefore not exact.
    """

    holds: bool
    witness: tuple | None
    exact: bool


def projective_directions(r: int, p: int):
    """One representative per point of P^{r-1}(F_p): first nonzero entry 1."""
    if p ** (r - 1) > PROJECTIVE_DIRECTION_CAP:
        raise ResourceCapError(f"p^(r-1) = {p**(r-1)} exceeds the direction cap {PROJECTIVE_DIRECTION_CAP}")
    for lead in range(r):
        for tail in itertools.product(range(p), repeat=r - 1 - lead):
            yield (0,) * lead + (1,) + tail


def _rational_directions(r: int, samples: int, seed: int):
    for i in range(r):
        yield tuple(1 if j == i else 0 for j in range(r))
    for i in range(r):
        for j in range(i + 1, r):
            yield tuple(1 if k in (i, j) else 0 for k in range(r))
    rng = random.Random(seed)
    for _ in range(samples):
        vec = tuple(rng.randint(-10**6, 10**6) for _ in range(r))
        if any(vec):
            yield vec


def _direction_scan(m: KronRep, target_rank: int, samples: int, seed: int) -> DirectionScan:
    if m.field.is_prime_field:
        for alpha in projective_directions(m.r, m.field.p):
            if linalg.rank(specialize(m, alpha), m.field) != target_rank:
                return DirectionScan(False, alpha, True)
        return DirectionScan(True, None, True)
    # TODO: exact rational scan via elimination of the rank-drop locus
    for alpha in _rational_directions(m.r, samples, seed):
        if linalg.rank(specialize(m, alpha), m.field) != target_rank:
            return DirectionScan(False, alpha, True)
    return DirectionScan(True, None, False)


def is_ekp_rep(m: KronRep, samples: int = 32, seed: int = 0) -> DirectionScan:
    """Every nonzero direction specializes to an injective map."""
    return _direction_scan(m, m.d[0], samples, seed)


def is_eip_rep(m: KronRep, samples: int = 32, seed: int = 0) -> DirectionScan:
    """Every nonzero direction specializes to a surjective map."""
    return _direction_scan(m, m.d[1], samples, seed)


# -- Hom / Ext ----------------------------------------------------------------


def hom_dim(x: KronRep, y: KronRep) -> int:
    """dim Hom(x, y): nullity of the stacked intertwining system
    f2 * x_i = y_i * f1 over all r structure maps."""
    if x.r != y.r or x.field != y.field:
        raise ValueError("representations must share r and the field")
    fld = x.field
    dx1, dx2 = x.d
    dy1, dy2 = y.d
    n1 = dx1 * dy1  # unknowns of f1 (dy1 x dx1)
    n2 = dx2 * dy2  # unknowns of f2 (dy2 x dx2)
    unknowns = n1 + n2
    if unknowns == 0:
        return 0
    rows: list[list] = []
    for k in range(x.r):
        xm = x.maps[k]
        ym = y.maps[k]
        for s in range(dy2):
            for t in range(dx1):
                row = [fld.zero] * unknowns
                # (f2 * xm)[s][t] = sum_u f2[s][u] xm[u][t]
                for u in range(dx2):
                    c = xm[u][t]
                    if c != 0:
                        row[n1 + s * dx2 + u] = fld.add(row[n1 + s * dx2 + u], c)
                # -(ym * f1)[s][t] = -sum_v ym[s][v] f1[v][t]
                for v in range(dy1):
                    c = ym[s][v]
                    if c != 0:
                        idx = v * dx1 + t
                        row[idx] = fld.sub(row[idx], c)
                rows.append(row)
    return unknowns - linalg.rank(rows, fld)


def euler_form_dims(r: int, dx: tuple[int, int], dy: tuple[int, int]) -> int:
    """Euler form of the r-arrow quiver on dimension vectors."""
    return dx[0] * dy[0] + dx[1] * dy[1] - r * dx[0] * dy[1]


def ext_dim(x: KronRep, y: KronRep) -> int:
    """dim Ext^1(x, y) = dim Hom(x, y) - <dim x, dim y>; never negative."""
    value = hom_dim(x, y) - euler_form_dims(x.r, x.d, y.d)
    if value < 0:
        raise ArithmeticError("negative Ext dimension; rank computation is broken")
    return value


def end_is_brick(m: KronRep) -> bool:
    """One-dimensional endomorphism algebra (certifies indecomposability)."""
    return hom_dim(m, m) == 1


# -- base change and the thin test family ------------------------------------


def base_change(g: Matrix, m: KronRep) -> KronRep:
    """The twisted representation with maps N_j = sum_i g[i][j] * M_i.

    g must be invertible over the field of m; specializing the result in
    direction alpha equals specializing m in direction g*alpha.
    """
    fld = m.field
    gg = [[fld.coerce(v) for v in row] for row in g]
    if len(gg) != m.r or any(len(row) != m.r for row in gg):
        raise ValueError(f"base change matrix must be {m.r}x{m.r}")
    if linalg.mat_inv(gg, fld) is None:
        raise ValueError("base change matrix is singular")
    mats = m.mats()
    new_maps = [linalg.lin_comb(mats, [gg[i][j] for i in range(m.r)], fld) for j in range(m.r)]
    return KronRep(m.r, fld, m.d, tuple(linalg.tuplify(n) for n in new_maps))


def make_x_alpha(r: int, alpha, field: FieldSpec) -> KronRep:
    """The thin test representation of dimension (1, r-1) for a direction.

    Hom(X_alpha, M) vanishes exactly when the specialization of M along
    alpha is injective, so these bricks detect the equal kernels property.
    For a standard basis direction e_i the i-th map is the zero column and
    the remaining maps enumerate the basis columns of the target; a
    general direction twists that model by a base change carrying e_1 to
    alpha.
    """
    coeffs = [field.coerce(x) for x in alpha]
    if len(coeffs) != r:
        raise ValueError(f"direction length {len(coeffs)} != r = {r}")
    if all(c == 0 for c in coeffs):
        raise ValueError("direction must be nonzero")
    if r < 2:
        raise ValueError("the thin family needs r >= 2")

    def basis_model(i: int) -> KronRep:
        maps = []
        col = 0
        for j in range(r):
            mat = [[field.zero] for _ in range(r - 1)]
            if j != i:
                mat[col][0] = field.one
                col += 1
            maps.append(mat)
        return KronRep(r, field, (1, r - 1), tuple(linalg.tuplify(m) for m in maps))

    lead = next(i for i, c in enumerate(coeffs) if c != 0)
    if coeffs[lead] == field.one and all(c == 0 for k, c in enumerate(coeffs) if k != lead):
        return basis_model(lead)
    # columns: alpha first, then the standard basis without index `lead`
    g = [[field.zero] * r for _ in range(r)]
    for i in range(r):
        g[i][0] = coeffs[i]
    col = 1
    for j in range(r):
        if j != lead:
            g[j][col] = field.one
            col += 1
    g_inv = linalg.mat_inv(g, field)
    assert g_inv is not None  # unit leading column keeps g invertible
    return base_change(g_inv, basis_model(0))


# -- generation ---------------------------------------------------------------


def random_rep(r: int, d: tuple[int, int], field: FieldSpec, seed: int) -> KronRep:
    """Uniform random entries over F_p, small random fractions over Q;
    deterministic under the seed."""
    rng = random.Random(seed)
    d1, d2 = d

    def entry():
        if field.is_prime_field:
            return rng.randrange(field.p)
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    maps = tuple(tuple(tuple(field.coerce(entry()) for _ in range(d1)) for _ in range(d2)) for _ in range(r))
    return KronRep(r, field, d, maps)


def direct_sum(x: KronRep, y: KronRep) -> KronRep:
    if x.r != y.r or x.field != y.field:
        raise ValueError("summands must share r and the field")
    fld = x.field
    d1 = x.d[0] + y.d[0]
    d2 = x.d[1] + y.d[1]
    maps = []
    for k in range(x.r):
        block = linalg.zeros(d2, d1, fld)
        for i in range(x.d[1]):
            for j in range(x.d[0]):
                block[i][j] = x.maps[k][i][j]
        for i in range(y.d[1]):
            for j in range(y.d[0]):
                block[x.d[1] + i][x.d[0] + j] = y.maps[k][i][j]
        maps.append(linalg.tuplify(block))
    return KronRep(x.r, fld, (d1, d2), tuple(maps))


# -- exhaustive enumeration up to isomorphism ---------------------------------


def gl_order(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p**n - p**i
    return out


@dataclass(frozen=True)
class ClassInfo:
    rep: KronRep
    is_brick: bool
    indecomposable: bool


def _invertibles(n: int, p: int, fld: FieldSpec) -> list[Matrix]:
    if n == 0:
        return [[]]
    out = []
    for entries in itertools.product(range(p), repeat=n * n):
        m = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        if linalg.rank(m, fld) == n:
            out.append(m)
    return out


def _rep_key(maps) -> tuple:
    return tuple(v for m in maps for row in m for v in row)


def _orbit_keys(mats: list[Matrix], g1_invs: list[Matrix], g2s: list[Matrix], fld: FieldSpec) -> set[tuple]:
    d2 = len(mats[0])
    d1 = len(mats[0][0]) if d2 else 0
    if d1 == 0 or d2 == 0:
        return {_rep_key(mats)}
    keys = set()
    for g1i in g1_invs:
        half = [linalg.mat_mul(m, g1i, fld) for m in mats]
        for g2 in g2s:
            keys.add(_rep_key([linalg.mat_mul(g2, h, fld) for h in half]))
    return keys


_ENUM_CACHE: dict = {}


def enumerate_small(r: int, d: tuple[int, int], p: int) -> list[ClassInfo]:
    """All isomorphism classes of r-tuples of d2 x d1 matrices over F_p.

    Classes are orbits of the simultaneous base-change action at both
    vertices, computed by direct group enumeration; each class reports a
    lexicographically minimal representative.  Indecomposability is the
    brick test plus, for non-bricks, an exhaustive comparison against all
    direct sums of smaller classes.  Hard caps keep this a desk-scale
    oracle only.
    """
    d = (int(d[0]), int(d[1]))
    cache_key = (r, d, p)
    if cache_key in _ENUM_CACHE:
        return _ENUM_CACHE[cache_key]
    d1, d2 = d
    fld = FieldSpec.prime(p)
    if p ** (r * d1 * d2) > ENUM_TUPLE_CAP:
        raise ResourceCapError(f"p^(r*d1*d2) = {p**(r*d1*d2)} exceeds {ENUM_TUPLE_CAP}")
    if gl_order(d1, p) * gl_order(d2, p) > ENUM_GROUP_CAP:
        raise ResourceCapError("base-change group too large to enumerate")

    g1s = _invertibles(d1, p, fld)
    g1_invs = [linalg.mat_inv(g, fld) for g in g1s]
    g2s = _invertibles(d2, p, fld)

    entries = r * d1 * d2
    seen: set[tuple] = set()
    reps: list[KronRep] = []
    for flat in itertools.product(range(p), repeat=entries):
        if flat in seen:
            continue
        mats = [
            [list(flat[k * d1 * d2 + i * d1 : k * d1 * d2 + (i + 1) * d1]) for i in range(d2)]
            for k in range(r)
        ]
        seen |= _orbit_keys(mats, g1_invs, g2s, fld)
        reps.append(KronRep(r, fld, d, tuple(linalg.tuplify(m) for m in mats)))

    decomposable_keys: set[tuple] = set()
    for a1 in range(d1 + 1):
        for a2 in range(d2 + 1):
            if (a1, a2) == (0, 0) or (a1, a2) == d:
                continue
            b = (d1 - a1, d2 - a2)
            if b == (0, 0):
                continue
            for left in enumerate_small(r, (a1, a2), p):
                for right in enumerate_small(r, b, p):
                    total = direct_sum(left.rep, right.rep)
                    key = min(_orbit_keys(total.mats(), g1_invs, g2s, fld))
                    decomposable_keys.add(key)

    out = []
    for rep in reps:
        brick = end_is_brick(rep)
        indec = brick or _rep_key(rep.maps) not in decomposable_keys
        out.append(ClassInfo(rep, brick, indec))
    _ENUM_CACHE[cache_key] = out
    return out


# -- JSON interchange ---------------------------------------------------------


def _entry_to_json(v, field: FieldSpec):
    if field.is_prime_field:
        return int(v)
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def _entry_from_json(v, field: FieldSpec):
    if field.is_prime_field:
        if not isinstance(v, int):
            raise RepFormatError(f"prime-field entries must be integers, got {v!r}")
        return v
    if isinstance(v, str):
        num, _, den = v.partition("/")
        try:
            return Fraction(int(num), int(den or "1"))
        except (ValueError, ZeroDivisionError) as exc:
            raise RepFormatError(f"bad rational entry {v!r}") from exc
    if isinstance(v, int):
        return Fraction(v)
    raise RepFormatError(f"bad rational entry {v!r}")


def field_to_dict(field: FieldSpec) -> dict:
    if field.is_prime_field:
        return {"type": "prime", "p": field.p}
    return {"type": "rational"}


def field_from_dict(data) -> FieldSpec:
    try:
        kind = data["type"]
    except (TypeError, KeyError) as exc:
        raise RepFormatError("field must be an object with a 'type'") from exc
    if kind == "prime":
        try:
            return FieldSpec.prime(int(data["p"]))
        except (KeyError, ValueError) as exc:
            raise RepFormatError(f"bad prime field spec {data!r}") from exc
    if kind == "rational":
        return FieldSpec.rationals()
    raise RepFormatError(f"unknown field type {kind!r}")


def rep_to_dict(m: KronRep) -> dict:
    return {
        "r": m.r,
        "field": field_to_dict(m.field),
        "d": [m.d[0], m.d[1]],
        "maps": [[[_entry_to_json(v, m.field) for v in row] for row in mat] for mat in m.maps],
    }


def rep_from_dict(data) -> KronRep:
    try:
        r = int(data["r"])
        field = field_from_dict(data["field"])
        d1, d2 = (int(v) for v in data["d"])
        raw_maps = data["maps"]
    except (TypeError, KeyError, ValueError) as exc:
        raise RepFormatError(f"malformed representation data: {exc}") from exc
    if not isinstance(raw_maps, list):
        raise RepFormatError("maps must be a list of matrices")
    maps = []
    for mat in raw_maps:
        maps.append(tuple(tuple(_entry_from_json(v, field) for v in row) for row in mat))
    try:
        return KronRep(r, field, (d1, d2), tuple(maps))
    except RepFormatError:
        raise
    except (TypeError, ValueError) as exc:
        raise RepFormatError(f"malformed representation data: {exc}") from exc


def load_rep(path) -> KronRep:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise RepFormatError(f"{path}: {exc}") from exc
    return rep_from_dict(data)


def save_rep(m: KronRep, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep_to_dict(m), fh, sort_keys=True)
        fh.write("\n")
