"""Alexander duality, the Bier sphere (deleted join with the dual), its
minimal non-faces, and classification against the flag and truncation
reference families.

Ground-set convention: the Bier sphere of a complex on [m] lives on [2m],
with the primed copy of vertex i stored as m + i.  Outputs keep ghost
ground elements; comparisons against reference families restrict to the
vertex set first (combinatorial equivalence).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    Complex,
    Isomorphism,
    are_isomorphic,
    boundary_simplex,
    cross_polytope,
    cycle,
    drop_ghosts,
    faces,
    is_flag,
    join,
    maps_facets_onto,
    minimal_nonfaces,
    nerve_q2_3,
)
from .errors import InvalidInput, UndefinedDual


def alexander_dual(k: Complex) -> Complex:
    """Complex whose facets are the complements of the minimal non-faces.

    Involutive on every complex other than the full simplex, which has no
    dual here.
    """
    nonfaces = minimal_nonfaces(k)
    if not nonfaces:
        raise UndefinedDual("the full simplex has no Alexander dual")
    full = k.full_mask
    return Complex(k.m, tuple(sorted(full ^ s for s in nonfaces)))


def bier_sphere(k: Complex, brute: bool = False) -> Complex:
    """Deleted join of ``k`` and its dual, on [2m]; dimension m - 2.

    Facets are generated directly as partitions A + {b} + C of [m] with A a
    face and C a dual face; ``brute=True`` instead filters all deleted-join
    faces for maximality and is kept as the verification oracle.
    """
    dual = alexander_dual(k)
    m = k.m
    faces_k = faces(k)
    faces_dual = faces(dual)
    if brute:
        gens = [
            a | (c << m)
            for a in faces_k
            for c in faces_dual
            if not a & c
        ]
        return Complex.from_masks(2 * m, gens)
    full = k.full_mask
    gens = []
    for a in faces_k:
        rest = full ^ a
        bb = rest
        while bb:
            b = bb & -bb
            bb ^= b
            c = rest ^ b
            if c in faces_dual:
                gens.append(a | (c << m))
    if not gens:
        gens = [0]
    return Complex(2 * m, tuple(sorted(set(gens))))


def bier_minimal_nonfaces(k: Complex) -> list[int]:
    """Minimal non-faces of the Bier sphere from the three generator
    families: non-faces of k, primed non-faces of the dual, and the pairs
    {i, i'}.  The raw union may be redundant; it is minimalized here and
    equals ``minimal_nonfaces(bier_sphere(k))``."""
    raw = bier_nonface_generators(k)
    reduced = sorted(
        s for s in raw
        if not any(t != s and t & s == t for t in raw)
    )
    return sorted(reduced, key=lambda x: (x.bit_count(), x))


def bier_nonface_generators(k: Complex) -> list[int]:
    """The unreduced generator list behind ``bier_minimal_nonfaces``."""
    dual = alexander_dual(k)
    m = k.m
    gens = list(minimal_nonfaces(k))
    gens += [s << m for s in minimal_nonfaces(dual)]
    gens += [(1 << i) | (1 << (m + i)) for i in range(m)]
    return sorted(set(gens), key=lambda x: (x.bit_count(), x))


def swap_isomorphism(k: Complex) -> Isomorphism:
    """The unprimed/primed swap i <-> i', an isomorphism from the Bier
    sphere of ``k`` onto the Bier sphere of its dual."""
    m = k.m
    mapping = tuple(list(range(m + 1, 2 * m + 1)) + list(range(1, m + 1)))
    iso = Isomorphism(mapping)
    if not maps_facets_onto(iso, bier_sphere(k), bier_sphere(alexander_dual(k))):
        raise AssertionError("swap failed to map the Bier sphere onto its dual's")
    return iso


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class FlagKind:
    """Reference family of a flag sphere: the simple polytope is
    family x I^n, with family one of 'cube' (the polytope is I^n itself),
    'cube_x_p5', 'cube_x_p6', 'cube_x_q23'."""

    family: str
    n: int


@dataclass(frozen=True)
class BierClassification:
    """All applicable tags; a sphere can carry several (the hexagon is both
    a flag polygon and a truncation sphere)."""

    simplex: bool
    golod_points: int | None
    flag: bool
    flag_kind: FlagKind | None

    @property
    def tags(self) -> tuple[str, ...]:
        out = []
        if self.simplex:
            out.append("simplex")
        if self.golod_points is not None:
            out.append(f"golod-family({self.golod_points})")
        if self.flag:
            if self.flag_kind is not None:
                out.append(
                    f"flag-family({self.flag_kind.family}, n={self.flag_kind.n})"
                )
            else:
                out.append("flag-unclassified")
        if len(out) == 0:
            out.append("other")
        return tuple(out)


def reference_flag_sphere(kind: FlagKind) -> Complex:
    """The sphere (polytope-nerve) of a reference family member."""
    base = {
        "cube": Complex(0, (0,)),
        "cube_x_p5": cycle(5),
        "cube_x_p6": cycle(6),
        "cube_x_q23": nerve_q2_3(),
    }
    if kind.family not in base:
        raise InvalidInput(f"unknown flag family {kind.family!r}")
    if kind.n < 0 or (kind.family == "cube" and kind.n < 1):
        raise InvalidInput("cube family needs n >= 1; others n >= 0")
    return join(cross_polytope(kind.n), base[kind.family])


def match_flag_family(sphere: Complex) -> FlagKind | None:
    """Identify a ghost-free flag sphere against the four families by
    isomorphism; dimension and vertex count pin down the only candidate n
    per family."""
    d = sphere.dim
    n_vertices = sphere.m
    candidates = []
    if d + 1 >= 1 and n_vertices == 2 * (d + 1):
        candidates.append(FlagKind("cube", d + 1))
    if d - 1 >= 0:
        if n_vertices == 2 * (d - 1) + 5:
            candidates.append(FlagKind("cube_x_p5", d - 1))
        if n_vertices == 2 * (d - 1) + 6:
            candidates.append(FlagKind("cube_x_p6", d - 1))
    if d - 2 >= 0 and n_vertices == 2 * (d - 2) + 8:
        candidates.append(FlagKind("cube_x_q23", d - 2))
    for kind in candidates:
        if are_isomorphic(sphere, reference_flag_sphere(kind)) is not None:
            return kind
    return None


def _points_count(k: Complex) -> int | None:
    """Number of points if every facet is a single vertex, else None."""
    if k.facets == (0,):
        return None
    if all(f.bit_count() == 1 for f in k.facets):
        return len(k.facets)
    return None


def classify_bier(k: Complex) -> BierClassification:
    """Tags of the Bier sphere of ``k`` (m >= 3, k not the full simplex):

    * simplex: k or its dual is the boundary of the full simplex;
    * golod-family(l): k or its dual is l disjoint points (ghosts allowed);
    * flag-family(kind): the Bier sphere is flag; the kind is found by
      isomorphism against the four reference families.
    """
    if k.m < 3:
        raise InvalidInput("classification needs m >= 3")
    dual = alexander_dual(k)
    simplex = k == boundary_simplex(k.m) or dual == boundary_simplex(k.m)
    pts = _points_count(k)
    if pts is None:
        pts = _points_count(dual)
    sphere = bier_sphere(k)
    flag = is_flag(sphere)
    kind = match_flag_family(drop_ghosts(sphere)) if flag else None
    return BierClassification(simplex, pts, flag, kind)
