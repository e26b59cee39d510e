"""Cubical models: the disc Z(K, K-dual) inside the subdivided cube
[-1,1]^m, its boundary (the canonical cubulation of the Bier sphere), cone
cubulations, exact cellular homology, and the polyhedral-product partition
check on rational grids.

Cells are combinatorial state vectors, one state per coordinate:
fixed at -1, 0 or +1, or spanning [-1,0] or [0,+1].  No floating point:
point checks use exact rationals.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import Complex, faces, has_face, vertices_of
from .duality import alexander_dual, bier_sphere
from .errors import InvalidInput

FIX_NEG, FIX_ZERO, FIX_POS, SPAN_NEG, SPAN_POS = range(5)

STATE_SYMBOLS = {
    FIX_NEG: "-",
    FIX_ZERO: "0",
    FIX_POS: "+",
    SPAN_NEG: "[-0]",
    SPAN_POS: "[0+]",
}

_ENDPOINTS = {SPAN_NEG: (FIX_NEG, FIX_ZERO), SPAN_POS: (FIX_ZERO, FIX_POS)}

Cell = tuple[int, ...]


def cell_dim(cell: Cell) -> int:
    return sum(1 for s in cell if s in _ENDPOINTS)


def cell_faces(cell: Cell):
    """Codimension-one faces: one spanning coordinate pinned to an endpoint."""
    for i, s in enumerate(cell):
        if s in _ENDPOINTS:
            lower, upper = _ENDPOINTS[s]
            yield cell[:i] + (lower,) + cell[i + 1:]
            yield cell[:i] + (upper,) + cell[i + 1:]


def cell_symbol(cell: Cell) -> str:
    return " ".join(STATE_SYMBOLS[s] for s in cell)


def _closure(top_cells) -> frozenset[Cell]:
    seen: set[Cell] = set()
    stack = list(top_cells)
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        stack.extend(cell_faces(c))
    return frozenset(seen)


@dataclass(frozen=True)
class CubicalComplex:
    """Face-closed set of cells of the subdivided cube [-1,1]^m."""

    m: int
    cells: frozenset[Cell]

    def __post_init__(self):
        for c in self.cells:
            if len(c) != self.m or any(s not in STATE_SYMBOLS for s in c):
                raise InvalidInput(f"bad cell {c}")
            for f in cell_faces(c):
                if f not in self.cells:
                    raise InvalidInput(f"cell set not face-closed at {c}")

    @property
    def dim(self) -> int:
        return max((cell_dim(c) for c in self.cells), default=-1)

    def cells_by_dim(self) -> list[list[Cell]]:
        out: list[list[Cell]] = [[] for _ in range(self.dim + 1)]
        for c in self.cells:
            out[cell_dim(c)].append(c)
        for lst in out:
            lst.sort()
        return out

    def maximal_cells(self) -> list[Cell]:
        covers: set[Cell] = set()
        for c in self.cells:
            covers.update(cell_faces(c))
        return sorted(c for c in self.cells if c not in covers)


# ---------------------------------------------------------------------------
# construction


def z_complex(k: Complex) -> CubicalComplex:
    """The intersection of the two polyhedral products over [-1,1]: union of
    the cells spanned by the Bier triples (face of K, one zero coordinate,
    face of the dual), closed under faces.  A cubulated (m-1)-disc."""
    sphere = bier_sphere(k)
    m = k.m
    tops = []
    for facet in sphere.facets:
        a = facet & k.full_mask
        c = facet >> m
        cell = []
        for i in range(m):
            b = 1 << i
            if a & b:
                cell.append(SPAN_POS)
            elif c & b:
                cell.append(SPAN_NEG)
            else:
                cell.append(FIX_ZERO)
        tops.append(tuple(cell))
    tops.append(tuple([FIX_ZERO] * m))
    return CubicalComplex(m, _closure(tops))


def cell_in_z(cell: Cell, k: Complex, dual: Complex | None = None) -> bool:
    """Membership predicate equivalent to the union-of-triples construction:
    the positive support must be a face of K and the negative support a
    face of the dual."""
    if dual is None:
        dual = alexander_dual(k)
    pos = 0
    neg = 0
    for i, s in enumerate(cell):
        if s in (FIX_POS, SPAN_POS):
            pos |= 1 << i
        elif s in (FIX_NEG, SPAN_NEG):
            neg |= 1 << i
    return has_face(k, pos) and has_face(dual, neg)


def boundary_complex(z: CubicalComplex) -> CubicalComplex:
    """Cells of codimension one lying in exactly one top cell, with all
    their faces.  Requires a pure complex."""
    top = z.dim
    by_dim = z.cells_by_dim()
    top_cells = by_dim[top] if top >= 0 else []
    if _closure(top_cells) != z.cells:
        raise InvalidInput("boundary of a non-pure cubical complex")
    counts: dict[Cell, int] = {}
    for c in top_cells:
        for f in cell_faces(c):
            counts[f] = counts.get(f, 0) + 1
    rim = [f for f, n in counts.items() if n == 1]
    return CubicalComplex(z.m, _closure(rim))


def cone_cubulation(l: Complex) -> CubicalComplex:
    """Union of the cubes [0,1]^tau over the faces tau: cells fix every
    coordinate outside a face of L at 0 and use only 0, +1 and [0,+1]
    states inside it.  Contractible."""
    cells: set[Cell] = set()
    for tau in faces(l):
        idx = [v - 1 for v in vertices_of(tau)]
        for states in itertools.product((FIX_ZERO, FIX_POS, SPAN_POS), repeat=len(idx)):
            cell = [FIX_ZERO] * l.m
            for i, s in zip(idx, states):
                cell[i] = s
            cells.add(tuple(cell))
    return CubicalComplex(l.m, frozenset(cells))


# ---------------------------------------------------------------------------
# cellular homology


def cubical_homology(c: CubicalComplex, p: int = 0) -> list[int]:
    """Reduced cellular homology ranks in degrees 0..dim over Q (p = 0) or
    GF(p).  Crossing the k-th spanning coordinate carries sign (-1)^k, with
    +1 at the upper endpoint and -1 at the lower."""
    if not c.cells:
        return []
    by_dim = c.cells_by_dim()
    index = [{cell: i for i, cell in enumerate(lst)} for lst in by_dim]
    ranks = [0] * (len(by_dim) + 1)
    ranks[0] = 1  # augmentation onto the coefficients
    for d in range(1, len(by_dim)):
        rows = [[0] * len(by_dim[d]) for _ in by_dim[d - 1]]
        for col, cell in enumerate(by_dim[d]):
            span_no = 0
            for i, s in enumerate(cell):
                if s in _ENDPOINTS:
                    lower, upper = _ENDPOINTS[s]
                    sign = -1 if span_no & 1 else 1
                    up_cell = cell[:i] + (upper,) + cell[i + 1:]
                    lo_cell = cell[:i] + (lower,) + cell[i + 1:]
                    rows[index[d - 1][up_cell]][col] += sign
                    rows[index[d - 1][lo_cell]][col] -= sign
                    span_no += 1
        ranks[d] = linalg.rank(rows, p)
    return [
        len(by_dim[d]) - ranks[d] - ranks[d + 1] for d in range(len(by_dim))
    ]


# ---------------------------------------------------------------------------
# polyhedral-product membership and the partition check


def point_membership(x, k: Complex, side: str) -> bool:
    """Is the point of [-1,1]^m in the polyhedral product of K with the
    closed half-interval on the given side ('nonpositive' or 'nonnegative')?

    For side 'nonpositive' the missing set is {i : x_i > 0} and membership
    means that set is a face; symmetrically for 'nonnegative'.
    """
    if len(x) != k.m:
        raise InvalidInput("point length differs from the ground-set size")
    if any(not -1 <= xi <= 1 for xi in x):
        raise InvalidInput("coordinates must lie in [-1, 1]")
    if side == "nonpositive":
        missing = sum(1 << i for i, xi in enumerate(x) if xi > 0)
    elif side == "nonnegative":
        missing = sum(1 << i for i, xi in enumerate(x) if xi < 0)
    else:
        raise InvalidInput("side must be 'nonpositive' or 'nonnegative'")
    return has_face(k, missing)


@dataclass(frozen=True)
class GwReport:
    """Outcome of the partition check of the two polyhedral products."""

    m: int
    resolution: int
    seed: int
    grid_points: int
    random_points: int
    violations: tuple


def gw_partition_check(
    k: Complex, resolution: int = 4, seed: int = 0, random_points: int = 128
) -> GwReport:
    """Verify that every point of [-1,1]^m lies in exactly one of the
    product over K with the nonpositive interval and the product over the
    dual with the strictly-positive complement.

    Exhaustive over the rational grid of the given resolution plus a seeded
    batch of random rational points; zero coordinates are classified by the
    K side iff the positive support is a face.
    """
    if resolution < 1:
        raise InvalidInput("resolution must be positive")
    dual = alexander_dual(k)
    axis = [Fraction(2 * t - resolution, resolution) for t in range(resolution + 1)]
    rng = random.Random(seed)
    q = 2 * resolution + 1
    randoms = [
        tuple(Fraction(rng.randint(-q, q), q) for _ in range(k.m))
        for _ in range(random_points)
    ]
    violations = []
    for point in itertools.chain(itertools.product(axis, repeat=k.m), randoms):
        in_k = has_face(k, sum(1 << i for i, xi in enumerate(point) if xi > 0))
        in_dual = has_face(dual, sum(1 << i for i, xi in enumerate(point) if xi <= 0))
        if in_k == in_dual:
            violations.append((tuple(point), in_k, in_dual))
    return GwReport(
        k.m,
        resolution,
        seed,
        (resolution + 1) ** k.m,
        random_points,
        tuple(violations),
    )
