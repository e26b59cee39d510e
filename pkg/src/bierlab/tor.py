"""Exact simplicial cohomology, the full-subcomplex decomposition of the
face-ring Tor algebra, and product-level Golod predicates.

Cochain conventions: the reduced complex includes the empty face in degree
-1; the coboundary of a basis cochain at face F places sign (-1)^pos(v, G)
on each coface G = F + {v}, where pos is the index of v in the sorted G.

The pairwise product on the decomposition is the join cross product: on
basis cochains, alpha_L (x) alpha_M goes to shuffle_sign(L, M) alpha_{L+M}
when L+M is a face and the supports are disjoint, else 0.  The shuffle sign
makes this a map of cochain complexes, so products of cocycles are cocycles
and vanishing modulo coboundaries is well defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .complexes import Complex, faces, is_pure, submasks, vertices_of
from .errors import ResourceLimit
from .linalg import Echelon, check_characteristic


@dataclass(frozen=True)
class FieldTag:
    """Coefficient field: characteristic 0 is the rationals, else GF(p)."""

    p: int = 0

    def __post_init__(self):
        check_characteristic(self.p)


QQ = FieldTag(0)
GF2 = FieldTag(2)
GF3 = FieldTag(3)


# ---------------------------------------------------------------------------
# cochain machinery on plain face lists


def _group_by_size(face_masks) -> list[list[int]]:
    """Faces grouped by cardinality in lexicographic vertex order; index s
    holds the size-s faces."""
    if not face_masks:
        return []
    top = max(f.bit_count() for f in face_masks)
    groups: list[list[int]] = [[] for _ in range(top + 1)]
    for f in face_masks:
        groups[f.bit_count()].append(f)
    for g in groups:
        g.sort(key=vertices_of)
    return groups


def _coface_sign(face: int, v_bit: int) -> int:
    """Sign of face -> face | v_bit in the coboundary."""
    pos = (face & (v_bit - 1)).bit_count()
    return -1 if pos & 1 else 1


def _coboundary_matrix(lower: list[int], upper: list[int]) -> list[list[int]]:
    """Matrix of delta from cochains on ``lower`` to cochains on ``upper``."""
    idx = {f: i for i, f in enumerate(lower)}
    rows = []
    for g in upper:
        row = [0] * len(lower)
        gg = g
        while gg:
            v_bit = gg & -gg
            sub = g ^ v_bit
            j = idx.get(sub)
            if j is not None:
                row[j] = _coface_sign(sub, v_bit)
            gg ^= v_bit
        rows.append(row)
    return rows


def _cohomology_ranks(groups: list[list[int]], p: int) -> dict[int, int]:
    """Reduced cohomology ranks by degree (degree s-1 from size-s faces)."""
    if not groups:
        return {}
    ranks = {}
    prev_rank = 0
    for s in range(len(groups)):
        upper = groups[s + 1] if s + 1 < len(groups) else []
        r = linalg.rank(_coboundary_matrix(groups[s], upper), p) if upper else 0
        h = len(groups[s]) - r - prev_rank
        if h:
            ranks[s - 1] = h
        prev_rank = r
    return ranks


def _cocycle_representatives(groups, s: int, p: int) -> list[list]:
    """Echelonized cocycle representatives of degree s-1, deterministic."""
    lower = groups[s]
    upper = groups[s + 1] if s + 1 < len(groups) else []
    matrix = _coboundary_matrix(lower, upper)
    kernel = linalg.nullspace(matrix, len(lower), p) if upper else [
        linalg.to_field([1 if i == j else 0 for j in range(len(lower))], p)
        for i in range(len(lower))
    ]
    ech = Echelon(p, len(lower))
    if s >= 1:
        below = _coboundary_matrix(groups[s - 1], lower)
        # image of delta is spanned by its columns
        for j in range(len(groups[s - 1])):
            ech.add([row[j] for row in below])
    reps = []
    for vec in kernel:
        added = ech.add(vec)
        if added is not None:
            reps.append(added)
    return reps


@dataclass
class CohomologyBasis:
    """Ranks and echelonized cocycle representatives of reduced cohomology."""

    field: FieldTag
    ranks: dict[int, int]
    simplex_basis: dict[int, tuple[int, ...]]
    representatives: dict[int, list[tuple]]


def reduced_cohomology(k: Complex, f: FieldTag = QQ) -> CohomologyBasis:
    """Reduced simplicial cohomology of ``k`` over ``f`` with representatives.

    The void complex has rank 1 in degree -1.  Ghost ground elements do not
    contribute (cohomology is computed from the faces).
    """
    groups = _group_by_size(sorted(faces(k)))
    ranks = _cohomology_ranks(groups, f.p)
    basis = {}
    reps = {}
    for deg, r in ranks.items():
        basis[deg] = tuple(groups[deg + 1])
        reps[deg] = [tuple(v) for v in _cocycle_representatives(groups, deg + 1, f.p)]
        assert len(reps[deg]) == r
    return CohomologyBasis(f, ranks, basis, reps)


def homology_sphere_check(k: Complex, n: int) -> bool:
    """True iff the link of every face (the empty one included) has the
    reduced rational homology of a sphere of dimension n - 1 - |face|."""
    if not is_pure(k) or k.facets[-1].bit_count() != n:
        return False
    all_faces = sorted(faces(k))
    for sigma in all_faces:
        s = sigma.bit_count()
        link_faces = [f ^ sigma for f in all_faces if f & sigma == sigma]
        ranks = _cohomology_ranks(_group_by_size(link_faces), 0)
        if ranks != {n - 1 - s: 1}:
            return False
    return True


# ---------------------------------------------------------------------------
# bigraded Betti numbers


@dataclass
class BigradedBetti:
    """Ranks of the bigraded pieces, keyed (i, 2j) with both entries >= 0."""

    field: FieldTag
    m: int
    table: dict[tuple[int, int], int]

    def items_sorted(self):
        return sorted(self.table.items())


def hochster_betti(k: Complex, f: FieldTag = QQ) -> BigradedBetti:
    """Betti table via the sum over vertex subsets of reduced cohomology of
    full subcomplexes; beta[(0, 0)] = 1 comes from the empty subset."""
    if k.m > 16:
        raise ResourceLimit("hochster_betti sweeps 2^m subsets; need m <= 16")
    all_faces = sorted(faces(k))
    table: dict[tuple[int, int], int] = {}
    for j_mask in range(1 << k.m):
        sub_faces = [x for x in all_faces if x & j_mask == x]
        j = j_mask.bit_count()
        for deg, r in _cohomology_ranks(_group_by_size(sub_faces), f.p).items():
            key = (j - deg - 1, 2 * j)
            table[key] = table.get(key, 0) + r
    return BigradedBetti(f, k.m, table)


def koszul_betti_oracle(k: Complex, f: FieldTag = QQ) -> BigradedBetti:
    """Betti table straight from the Koszul complex of the face ring.

    Independent of the full-subcomplex route: for each squarefree
    multidegree J the complex has basis (sigma, tau) with sigma a face,
    sigma + tau = J disjointly, graded by |tau|, and differential moving
    one element of tau into sigma when the union is again a face.
    """
    if k.m > 10:
        raise ResourceLimit("koszul oracle is exponential; need m <= 10")
    face_set = faces(k)
    table: dict[tuple[int, int], int] = {}
    for j_mask in range(1 << k.m):
        j = j_mask.bit_count()
        basis: list[list[int]] = [[] for _ in range(j + 1)]  # index |tau| -> sigmas
        for sigma in submasks(j_mask):
            if sigma in face_set:
                basis[(j_mask ^ sigma).bit_count()].append(sigma)
        for b in basis:
            b.sort()
        index = [
            {sigma: col for col, sigma in enumerate(b)} for b in basis
        ]
        mats: list[list[list[int]]] = []
        for i in range(1, j + 1):
            rows = []
            for sigma in basis[i - 1]:
                rows.append([0] * len(basis[i]))
            for col, sigma in enumerate(basis[i]):
                tau = j_mask ^ sigma
                tt = tau
                while tt:
                    v_bit = tt & -tt
                    tt ^= v_bit
                    new_sigma = sigma | v_bit
                    if new_sigma in face_set:
                        pos = (tau & (v_bit - 1)).bit_count()
                        sign = -1 if pos & 1 else 1
                        rows[index[i - 1][new_sigma]][col] = sign
            mats.append(rows)
        ranks = [0] * (j + 2)
        for i in range(1, j + 1):
            if basis[i] and basis[i - 1]:
                ranks[i] = linalg.rank(mats[i - 1], f.p)
        for i in range(j + 1):
            h = len(basis[i]) - ranks[i] - ranks[i + 1]
            if h:
                key = (i, 2 * j)
                table[key] = table.get(key, 0) + h
    return BigradedBetti(f, k.m, table)


# ---------------------------------------------------------------------------
# pairwise products in the decomposition


def shuffle_sign(left: int, right: int) -> int:
    """Sign of the shuffle interleaving the sorted supports of two masks."""
    inversions = 0
    ll = left
    while ll:
        v_bit = ll & -ll
        inversions += (right & (v_bit - 1)).bit_count()
        ll ^= v_bit
    return -1 if inversions & 1 else 1


@dataclass(frozen=True)
class TorWitness:
    """A nonvanishing pairwise product between full-subcomplex classes."""

    subset_a: int
    subset_b: int
    size_a: int
    size_b: int
    index_a: int
    index_b: int


class SubsetCohomology:
    """Lazy cohomology data for all full subcomplexes of one complex.

    Shared by the product scans of a complex and of all its deletions: the
    full subcomplexes of a deletion are exactly the K_J avoiding the deleted
    element, so one table serves every scan.
    """

    def __init__(self, k: Complex, f: FieldTag):
        self.k = k
        self.field = f
        self.p = f.p
        self._faces = sorted(faces(k))
        self._groups: dict[int, list[list[int]]] = {}
        self._ranks: dict[int, dict[int, int]] = {}
        self._reps: dict[tuple[int, int], list] = {}
        self._index: dict[tuple[int, int], dict[int, int]] = {}
        self._im_echelon: dict[tuple[int, int], Echelon] = {}

    def groups(self, j_mask: int) -> list[list[int]]:
        g = self._groups.get(j_mask)
        if g is None:
            g = _group_by_size([x for x in self._faces if x & j_mask == x])
            self._groups[j_mask] = g
        return g

    def ranks(self, j_mask: int) -> dict[int, int]:
        r = self._ranks.get(j_mask)
        if r is None:
            r = _cohomology_ranks(self.groups(j_mask), self.p)
            self._ranks[j_mask] = r
        return r

    def representatives(self, j_mask: int, size: int) -> list:
        key = (j_mask, size)
        reps = self._reps.get(key)
        if reps is None:
            reps = _cocycle_representatives(self.groups(j_mask), size, self.p)
            self._reps[key] = reps
        return reps

    def face_index(self, j_mask: int, size: int) -> dict[int, int]:
        key = (j_mask, size)
        idx = self._index.get(key)
        if idx is None:
            groups = self.groups(j_mask)
            lst = groups[size] if size < len(groups) else []
            idx = {f: i for i, f in enumerate(lst)}
            self._index[key] = idx
        return idx

    def image_echelon(self, j_mask: int, size: int) -> Echelon:
        """Echelon basis of the coboundaries among size-``size`` cochains."""
        key = (j_mask, size)
        ech = self._im_echelon.get(key)
        if ech is None:
            groups = self.groups(j_mask)
            target = groups[size] if size < len(groups) else []
            ech = Echelon(self.p, len(target))
            if size >= 1 and size < len(groups):
                mat = _coboundary_matrix(groups[size - 1], target)
                for col in range(len(groups[size - 1])):
                    ech.add([row[col] for row in mat])
            self._im_echelon[key] = ech
        return ech

    def interesting_subsets(self, allowed: int) -> list[int]:
        """Nonempty subsets of ``allowed`` whose full subcomplex has
        reduced cohomology, ascending."""
        out = []
        sub = allowed
        while sub:
            if self.ranks(sub):
                out.append(sub)
            sub = (sub - 1) & allowed
        return sorted(out)

    def product_class_vector(self, a_mask, sa, a_vec, b_mask, sb, b_vec):
        """Cochain of the product of two representatives, over the size
        sa+sb faces of the full subcomplex on the union."""
        union = a_mask | b_mask
        groups = self.groups(union)
        t = sa + sb
        target = groups[t] if t < len(groups) else []
        idx_a = self.face_index(a_mask, sa)
        idx_b = self.face_index(b_mask, sb)
        vec = []
        for n in target:
            left = n & a_mask
            if left.bit_count() != sa:
                vec.append(0)
                continue
            right = n & b_mask
            ia = idx_a.get(left)
            ib = idx_b.get(right)
            if ia is None or ib is None:
                vec.append(0)
                continue
            coeff = a_vec[ia] * b_vec[ib]
            if coeff:
                vec.append(coeff * shuffle_sign(left, right))
            else:
                vec.append(0)
        return vec

    def product_is_nonzero(self, a_mask, sa, a_vec, b_mask, sb, b_vec) -> bool:
        vec = self.product_class_vector(a_mask, sa, a_vec, b_mask, sb, b_vec)
        if not any(vec):
            return False
        return not self.image_echelon(a_mask | b_mask, sa + sb).contains(vec)

    def _pairs(self, allowed: int):
        subsets = self.interesting_subsets(allowed)
        pairs = [
            (a, b)
            for a, b in itertools.combinations(subsets, 2)
            if not a & b
        ]
        # large unions first: witnesses on spheres pair complementary subsets
        pairs.sort(key=lambda ab: (-(ab[0] | ab[1]).bit_count(), ab))
        return pairs

    def witnesses(self, allowed: int, early_exit: bool = False) -> list[TorWitness]:
        found = []
        for a_mask, b_mask in self._pairs(allowed):
            for sa, ra in sorted(self.ranks(a_mask).items()):
                for sb, rb in sorted(self.ranks(b_mask).items()):
                    reps_a = self.representatives(a_mask, sa + 1)
                    reps_b = self.representatives(b_mask, sb + 1)
                    for ia, va in enumerate(reps_a):
                        for ib, vb in enumerate(reps_b):
                            if self.product_is_nonzero(
                                a_mask, sa + 1, va, b_mask, sb + 1, vb
                            ):
                                found.append(
                                    TorWitness(a_mask, b_mask, sa + 1, sb + 1, ia, ib)
                                )
                                if early_exit:
                                    return found
        found.sort(key=lambda w: (w.subset_a, w.subset_b, w.size_a, w.size_b,
                                  w.index_a, w.index_b))
        return found

    def has_witness(self, allowed: int) -> bool:
        return bool(self.witnesses(allowed, early_exit=True))


def tor_products(k: Complex, f: FieldTag = QQ) -> list[TorWitness]:
    """All nonvanishing pairwise products between classes of disjoint
    nonempty vertex subsets, in deterministic order."""
    if k.m > 16:
        raise ResourceLimit("product scan sweeps 2^m subsets; need m <= 16")
    return SubsetCohomology(k, f).witnesses(k.full_mask)


def is_product_golod(k: Complex, f: FieldTag = QQ) -> bool:
    """True iff every pairwise product of positive-degree classes vanishes."""
    if k.m > 16:
        raise ResourceLimit("product scan sweeps 2^m subsets; need m <= 16")
    return not SubsetCohomology(k, f).has_witness(k.full_mask)


def is_min_non_golod_product(k: Complex, f: FieldTag = QQ) -> bool:
    """Not product-Golod, but every single-element deletion is."""
    golod, min_non_golod = golod_summary(k, f)
    return min_non_golod


def golod_summary(k: Complex, f: FieldTag = QQ) -> tuple[bool, bool]:
    """(product-Golod, minimally-non-Golod at product level), one table."""
    if k.m > 16:
        raise ResourceLimit("product scan sweeps 2^m subsets; need m <= 16")
    sc = SubsetCohomology(k, f)
    golod = not sc.has_witness(k.full_mask)
    if golod:
        return True, False
    for v in range(k.m):
        if sc.has_witness(k.full_mask ^ (1 << v)):
            return False, False
    return False, True
