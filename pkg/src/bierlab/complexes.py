"""Simplicial complexes on an ordered ground set, stored as facet bitmasks.

Vertices are labeled 1..m and a subset of [m] is a Python int whose bit i-1
stands for vertex i.  All routines here are pure; ``Complex`` values are
immutable and hashable.  The representation is designed and tested for
m <= 64 (the largest ground sets in scope are 12 elements).

A complex always contains the empty face.  The void complex {emptyset} is
stored as ``facets == (0,)``.  Ghost vertices (ground elements lying in no
face) are allowed everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInput


# ---------------------------------------------------------------------------
# vertex-set helpers


def mask_of(vertices) -> int:
    """Bitmask of an iterable of 1-based vertex labels."""
    m = 0
    for v in vertices:
        if v < 1:
            raise InvalidInput(f"vertex labels are 1-based, got {v}")
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertex labels of a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int):
    """All subsets of ``mask``, the empty set last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _reduce_to_antichain(masks) -> tuple[int, ...]:
    """Inclusion-maximal elements, deduplicated, ascending."""
    uniq = sorted(set(masks))
    out = []
    for a in uniq:
        if not any(a != b and a & b == a for b in uniq):
            out.append(a)
    return tuple(out)


# ---------------------------------------------------------------------------
# the complex type


@dataclass(frozen=True)
class Complex:
    """Ground-set size plus the facet antichain."""

    m: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0:
            raise InvalidInput("ground-set size must be nonnegative")
        if not isinstance(self.facets, tuple) or not self.facets:
            raise InvalidInput("facets must be a nonempty tuple (use (0,) for the void complex)")
        full = (1 << self.m) - 1
        for f in self.facets:
            if f & ~full:
                raise InvalidInput(f"facet {bin(f)} has a vertex beyond ground set [{self.m}]")
        if self.facets != tuple(sorted(self.facets)):
            raise InvalidInput("facets must be sorted ascending")
        for a, b in itertools.combinations(self.facets, 2):
            if a & b == a or a & b == b:
                raise InvalidInput("facets must form an inclusion antichain")

    @classmethod
    def from_masks(cls, m: int, masks) -> "Complex":
        masks = list(masks)
        if not masks:
            masks = [0]
        return cls(m, _reduce_to_antichain(masks))

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return sorted(vertices_of(f) for f in self.facets)

    def __repr__(self):
        return f"Complex(m={self.m}, facets={self.facet_sets()})"


def make_complex(m: int, generators) -> Complex:
    """Complex on [m] generated by faces given as vertex iterables."""
    return Complex.from_masks(m, (mask_of(g) for g in generators))


# ---------------------------------------------------------------------------
# faces and membership


def has_face(k: Complex, s: int) -> bool:
    """True iff the vertex set ``s`` lies in some facet."""
    if s & ~k.full_mask:
        raise InvalidInput("face has a vertex beyond the ground set")
    return any(s & f == s for f in k.facets)


def faces(k: Complex) -> set[int]:
    """All faces of ``k`` as masks, including the empty face."""
    out: set[int] = set()
    for f in k.facets:
        out.update(submasks(f))
    return out


def faces_by_size(k: Complex) -> list[list[int]]:
    """Faces grouped by cardinality: entry s lists the size-s faces, sorted."""
    groups: list[list[int]] = [[] for _ in range(k.dim + 2)]
    for f in faces(k):
        groups[f.bit_count()].append(f)
    for g in groups:
        g.sort()
    return groups


def f_vector_counts(k: Complex) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_{dim}) face counts."""
    return tuple(len(g) for g in faces_by_size(k))


def euler_characteristic(k: Complex) -> int:
    """Unreduced Euler characteristic (empty face excluded)."""
    counts = f_vector_counts(k)
    return sum((-1) ** i * c for i, c in enumerate(counts[1:]))


def minimal_nonfaces(k: Complex) -> list[int]:
    """Inclusion-minimal non-faces, sorted by (size, mask).

    Level-by-level search: a size-s set is a candidate only when all its
    (s-1)-subsets are faces, so each reported set is minimal by construction.
    Empty iff k is the full simplex.
    """
    face_set = faces(k)
    m = k.m
    out: list[int] = []
    level = [0]  # size s-1 faces that could extend to candidates
    for s in range(1, m + 1):
        candidates: set[int] = set()
        for f in level:
            for v in range(k.m):
                b = 1 << v
                if not f & b:
                    candidates.add(f | b)
        next_level = []
        for c in sorted(candidates):
            # minimality: every maximal proper subset must be a face
            ok = True
            cc = c
            while cc:
                low = cc & -cc
                if (c ^ low) not in face_set:
                    ok = False
                    break
                cc ^= low
            if not ok:
                continue
            if c in face_set:
                next_level.append(c)
            else:
                out.append(c)
        level = next_level
    out.sort(key=lambda x: (x.bit_count(), x))
    return out


def is_flag(k: Complex) -> bool:
    return all(s.bit_count() <= 2 for s in minimal_nonfaces(k))


def is_pure(k: Complex) -> bool:
    return len({f.bit_count() for f in k.facets}) == 1


# ---------------------------------------------------------------------------
# subcomplexes


def compress_mask(mask: int, keep: int) -> int:
    """Re-index ``mask`` through the sorted enumeration of the bits of ``keep``."""
    out = 0
    pos = 0
    while keep:
        low = keep & -keep
        if mask & low:
            out |= 1 << pos
        pos += 1
        keep ^= low
    return out


def index_map(keep: int) -> dict[int, int]:
    """New 1-based label -> old 1-based label, for ground set ``keep``."""
    return {i + 1: v for i, v in enumerate(vertices_of(keep))}


def link(k: Complex, s: int) -> Complex:
    """Link of the face ``s``, re-indexed to a ground set of size m - |s|.

    The retained index map is ``index_map(full_mask ^ s)``.
    """
    if not has_face(k, s):
        raise InvalidInput("link requested at a non-face")
    keep = k.full_mask ^ s
    gens = [compress_mask(f ^ s, keep) for f in k.facets if f & s == s]
    return Complex.from_masks(k.m - s.bit_count(), gens)


def full_subcomplex(k: Complex, i: int) -> Complex:
    """K restricted to the vertex subset ``i``, re-indexed to |i| ground elements.

    The retained index map is ``index_map(i)``.
    """
    if i & ~k.full_mask:
        raise InvalidInput("subset has a vertex beyond the ground set")
    gens = [compress_mask(f & i, i) for f in k.facets]
    return Complex.from_masks(i.bit_count(), gens)


def deletion(k: Complex, v: int) -> Complex:
    """Full subcomplex on [m] minus the ground element ``v`` (1-based)."""
    if not 1 <= v <= k.m:
        raise InvalidInput("deleted element outside the ground set")
    return full_subcomplex(k, k.full_mask ^ (1 << (v - 1)))


def drop_ghosts(k: Complex) -> Complex:
    """Full subcomplex on the actual vertex set (ghost ground elements removed)."""
    verts = 0
    for f in k.facets:
        verts |= f
    return full_subcomplex(k, verts)


def vertex_mask(k: Complex) -> int:
    verts = 0
    for f in k.facets:
        verts |= f
    return verts


# ---------------------------------------------------------------------------
# joins, cones, suspensions, stellar subdivisions


def join(k: Complex, l: Complex) -> Complex:
    """Join on the disjoint ground set [m_k] followed by [m_l] shifted by m_k."""
    gens = [fk | (fl << k.m) for fk in k.facets for fl in l.facets]
    return Complex.from_masks(k.m + l.m, gens)


def cone(k: Complex) -> Complex:
    """Join with a single point; the apex is the new last ground element."""
    return join(k, Complex(1, (1,)))


def suspension(k: Complex) -> Complex:
    """Join with two disjoint points (the poles are the two new elements)."""
    return join(k, Complex(2, (1, 2)))


def stellar_subdivision(k: Complex, f: int) -> Complex:
    """Stellar subdivision at the nonempty face ``f``; new vertex is m+1.

    Faces containing f are removed and replaced by the sets
    G + {w} + F' with F' a proper subset of f and G in the link of f.
    """
    if f == 0:
        raise InvalidInput("cannot subdivide the empty face")
    if not has_face(k, f):
        raise InvalidInput("cannot subdivide a non-face")
    w = 1 << k.m
    gens = [g for g in k.facets if g & f != f]
    for g in k.facets:
        if g & f == f:
            rest = g ^ f
            for v in vertices_of(f):
                gens.append(rest | w | (f ^ (1 << (v - 1))))
    return Complex.from_masks(k.m + 1, gens)


# ---------------------------------------------------------------------------
# isomorphism


@dataclass(frozen=True)
class Isomorphism:
    """Ground-set bijection; mapping[i-1] is the image of vertex i."""

    mapping: tuple[int, ...]

    def apply(self, mask: int) -> int:
        out = 0
        for v in vertices_of(mask):
            out |= 1 << (self.mapping[v - 1] - 1)
        return out

    def inverse(self) -> "Isomorphism":
        inv = [0] * len(self.mapping)
        for i, im in enumerate(self.mapping):
            inv[im - 1] = i + 1
        return Isomorphism(tuple(inv))


def maps_facets_onto(iso: Isomorphism, k: Complex, l: Complex) -> bool:
    """Check that ``iso`` carries the facets of k exactly onto the facets of l."""
    if k.m != l.m or len(iso.mapping) != k.m:
        return False
    return sorted(iso.apply(f) for f in k.facets) == list(l.facets)


def _edge_masks(k: Complex) -> set[int]:
    return {s for s in faces(k) if s.bit_count() == 2}


def _vertex_invariants(k: Complex):
    """Isomorphism-invariant color per ground element, refined by neighbors."""
    fsizes: list[list[int]] = [[] for _ in range(k.m)]
    for f in k.facets:
        for v in vertices_of(f):
            fsizes[v - 1].append(f.bit_count())
    link_fv = []
    for v in range(1, k.m + 1):
        b = 1 << (v - 1)
        if any(f & b for f in k.facets):
            link_fv.append(f_vector_counts(link(k, b)))
        else:
            link_fv.append(())
    base = [(tuple(sorted(fsizes[v])), link_fv[v]) for v in range(k.m)]
    edges = _edge_masks(k)
    nbrs: list[list[int]] = [[] for _ in range(k.m)]
    for e in edges:
        a, b = vertices_of(e)
        nbrs[a - 1].append(b - 1)
        nbrs[b - 1].append(a - 1)
    colors = base
    for _ in range(2):
        colors = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(k.m)
        ]
    return colors


def are_isomorphic(k: Complex, l: Complex) -> Isomorphism | None:
    """A facet-preserving ground-set bijection, or None.

    Ghost elements carry a distinct invariant so they can only map to
    ghosts.  Deterministic: candidates are tried in ascending label order.
    """
    if k.m != l.m or len(k.facets) != len(l.facets):
        return None
    if sorted(f.bit_count() for f in k.facets) != sorted(f.bit_count() for f in l.facets):
        return None
    ck = _vertex_invariants(k)
    cl = _vertex_invariants(l)
    if sorted(ck) != sorted(cl):
        return None
    cand = [[w for w in range(k.m) if cl[w] == ck[v]] for v in range(k.m)]
    order = sorted(range(k.m), key=lambda v: (len(cand[v]), v))
    edges_k = _edge_masks(k)
    edges_l = _edge_masks(l)
    l_facets = list(l.facets)
    mapping = [0] * k.m
    used = [False] * k.m

    def rec(idx: int) -> bool:
        if idx == k.m:
            return sorted(
                mask_of(mapping[v - 1] + 1 for v in vertices_of(f)) for f in k.facets
            ) == l_facets
        v = order[idx]
        for w in cand[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:idx]:
                ek = (1 << v) | (1 << u)
                el = (1 << w) | (1 << mapping[u])
                if (ek in edges_k) != (el in edges_l):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(idx + 1):
                    return True
                used[w] = False
        return False

    if rec(0):
        return Isomorphism(tuple(w + 1 for w in mapping))
    return None


# ---------------------------------------------------------------------------
# canonical form


def _swap_fixes_facets(facets, a: int, b: int) -> bool:
    """Is the transposition of ground elements a, b (0-based) an automorphism?"""
    ba, bb = 1 << a, 1 << b
    swapped = []
    for f in facets:
        g = f & ~(ba | bb)
        if f & ba:
            g |= bb
        if f & bb:
            g |= ba
        swapped.append(g)
    return sorted(swapped) == list(facets)


def canonical_form(k: Complex) -> tuple[int, tuple[int, ...]]:
    """(m, facet masks) minimal over color-respecting relabelings.

    Colors are the refined vertex invariants; classes are ordered by their
    invariant value, so the result is identical for isomorphic complexes and
    distinct otherwise.  Backtracking search with sorted-prefix pruning and
    a transposition-automorphism cut keeps the search small at <= 12
    vertices.
    """
    m = k.m
    facets = k.facets
    if m == 0 or facets == (0,):
        return (m, facets)
    colors = _vertex_invariants(k)
    classes: dict = {}
    for v in range(m):
        classes.setdefault(colors[v], []).append(v)
    class_order = sorted(classes)
    pos_class: list = []
    for c in class_order:
        pos_class.extend([c] * len(classes[c]))
    nf = len(facets)
    best: list[int] | None = None
    assigned: list[int] = []  # old 0-based vertex at new position len-1
    newlabel = [0] * m  # old vertex -> new 1-based label (0 = unassigned)

    def complete_masks() -> list[int] | None:
        """Sorted masks of facets fully inside the assigned set, with pruning."""
        amask = 0
        for v in assigned:
            amask |= 1 << v
        done = []
        for f in facets:
            if f & amask == f:
                nm = 0
                ff = f
                while ff:
                    low = ff & -ff
                    nm |= 1 << (newlabel[low.bit_length() - 1] - 1)
                    ff ^= low
                done.append(nm)
        done.sort()
        return done

    def rec():
        nonlocal best
        kdepth = len(assigned)
        done = complete_masks()
        if best is not None:
            prefix = best[: len(done)]
            if done > prefix:
                return
            if done == prefix:
                if len(done) == nf:
                    return  # equal leaf, keep existing best
                if len(done) < nf and best[len(done)] < (1 << kdepth):
                    return  # every future facet mask is >= 2^kdepth
        if kdepth == m:
            if best is None or done < best:
                best = done
            return
        cls = pos_class[kdepth]
        candidates = [v for v in classes[cls] if newlabel[v] == 0]
        tried: list[int] = []
        for v in candidates:
            if any(_swap_fixes_facets(facets, v, u) for u in tried):
                continue
            tried.append(v)
            assigned.append(v)
            newlabel[v] = kdepth + 1
            rec()
            newlabel[v] = 0
            assigned.pop()

    rec()
    assert best is not None
    return (m, tuple(best))


def canonical_key(k: Complex) -> str:
    m, masks = canonical_form(k)
    return f"{m}|" + ",".join(str(x) for x in masks)


def canonical_representative(k: Complex) -> Complex:
    m, masks = canonical_form(k)
    return Complex(m, masks)


# ---------------------------------------------------------------------------
# standard builders


def boundary_simplex(m: int) -> Complex:
    """Boundary of the full simplex on [m]; the void complex when m = 1."""
    if m < 1:
        raise InvalidInput("boundary_simplex needs m >= 1")
    full = (1 << m) - 1
    return Complex.from_masks(m, [full ^ (1 << i) for i in range(m)])


def simplex(m: int) -> Complex:
    if m < 0:
        raise InvalidInput("simplex needs m >= 0")
    return Complex(m, ((1 << m) - 1,))


def cycle(n: int) -> Complex:
    if n < 3:
        raise InvalidInput("cycle needs at least 3 vertices")
    gens = [(1 << i) | (1 << ((i + 1) % n)) for i in range(n)]
    return Complex.from_masks(n, gens)


def points(count: int, m: int) -> Complex:
    """``count`` disjoint points on ground set [m]; the rest are ghosts."""
    if count < 0 or count > m:
        raise InvalidInput("need 0 <= count <= m")
    if count == 0:
        return Complex(m, (0,))
    return Complex.from_masks(m, [1 << i for i in range(count)])


def cross_polytope(n: int) -> Complex:
    """Boundary of the n-dimensional cross-polytope: n-fold join of S^0.

    This is the nerve complex of the n-cube; vertex pairs are (2i-1, 2i).
    """
    if n < 0:
        raise InvalidInput("cross_polytope needs n >= 0")
    out = Complex(0, (0,))
    s0 = Complex(2, (1, 2))
    for _ in range(n):
        out = join(out, s0)
    return out


@lru_cache(maxsize=None)
def nerve_q2_3() -> Complex:
    """Nerve of the cube with two adjacent edge cuts: a flag 2-sphere 8/18/12.

    Fixed choice: subdivide two edges of a common triangle of the
    octahedron (the duals of two cube edges sharing a vertex).
    """
    oct_ = cross_polytope(3)
    k = stellar_subdivision(oct_, mask_of([1, 3]))
    k = stellar_subdivision(k, mask_of([3, 5]))
    return k


def truncation_sphere(m: int, cuts: int) -> Complex:
    """Nerve of the simplex with ``cuts`` of its vertices cut off.

    Built from the boundary of the simplex on [m] by stellar subdivision of
    the facets [m] minus {i} for i = 1..cuts; vertex m+i is the i-th new one.
    """
    if not 0 <= cuts <= m:
        raise InvalidInput("need 0 <= cuts <= m")
    k = boundary_simplex(m)
    full = (1 << m) - 1
    for i in range(cuts):
        k = stellar_subdivision(k, full ^ (1 << i))
    return k


_BUILDERS = {
    "boundary-simplex": lambda a: boundary_simplex(int(a[0])),
    "simplex": lambda a: simplex(int(a[0])),
    "cycle": lambda a: cycle(int(a[0])),
    "cross-polytope": lambda a: cross_polytope(int(a[0])),
    "points": lambda a: points(int(a[0]), int(a[1])),
    "void": lambda a: Complex(int(a[0]), (0,)),
    "nerve-q23": lambda a: nerve_q2_3(),
    "truncation-sphere": lambda a: truncation_sphere(int(a[0]), int(a[1])),
}


def standard_complex(spec: str) -> Complex:
    """Builder lookup for strings like 'cycle:6', 'points:3,3', 'nerve-q23'."""
    name, _, argstr = spec.partition(":")
    if name not in _BUILDERS:
        raise InvalidInput(f"unknown builder {name!r}; choose from {sorted(_BUILDERS)}")
    args = [a for a in argstr.split(",") if a] if argstr else []
    try:
        return _BUILDERS[name](args)
    except (IndexError, ValueError) as exc:
        raise InvalidInput(f"bad arguments for builder {name!r}: {argstr!r}") from exc
