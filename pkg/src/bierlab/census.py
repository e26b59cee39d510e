"""Exhaustive enumeration up to isomorphism and the theorem-verification
suites.

Enumeration is by depth-first search over antichains (facet sets of
complexes, maximal-monomial sets of multicomplexes) with canonical-form
deduplication, so censuses are duplicate-free and deterministically
ordered.  Each suite returns a ``VerificationReport``; a release-quality
run has empty counterexample lists.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .complexes import (
    Complex,
    are_isomorphic,
    boundary_simplex,
    canonical_key,
    canonical_representative,
    cone,
    cycle,
    drop_ghosts,
    is_flag,
    make_complex,
    minimal_nonfaces,
    suspension,
)
from .duality import alexander_dual, bier_sphere, classify_bier
from .errors import InvalidInput, ResourceLimit
from .facevectors import f_vector, gamma_vector, h_vector, is_dehn_sommerville, realize_gamma_as_flag_f
from .multicomplexes import (
    Multicomplex,
    bier_relabeling_to_murai,
    classify_murai,
    multicomplex_of_complex,
    murai_face_ideal,
    murai_sphere,
    squarefree_support_masks,
)
from .cubical import (
    boundary_complex,
    cell_dim,
    cell_in_z,
    cubical_homology,
    gw_partition_check,
    z_complex,
)
from .tor import GF2, QQ, FieldTag, golod_summary, hochster_betti, homology_sphere_check
from .complexes import Isomorphism


# ---------------------------------------------------------------------------
# enumeration


def _antichains_of_masks(masks: list[int]):
    """All antichains (possibly empty) of the given subset masks, DFS."""
    n = len(masks)

    def rec(start: int, chosen: tuple[int, ...]):
        yield chosen
        for i in range(start, n):
            s = masks[i]
            if any(c & s == c for c in chosen):
                continue
            yield from rec(i + 1, chosen + (s,))

    yield from rec(0, ())


def all_labeled_complexes(m: int, include_simplex: bool = True) -> list[Complex]:
    """Every simplicial complex on [m], the void complex included."""
    if m > 5:
        raise ResourceLimit("labeled enumeration is doubly exponential; need m <= 5")
    masks = list(range(1, 1 << m))
    out = []
    for chain in _antichains_of_masks(masks):
        k = Complex(m, chain if chain else (0,))
        if not include_simplex and k.facets == ((1 << m) - 1,):
            continue
        out.append(k)
    return out


@lru_cache(maxsize=None)
def _iso_classes(m: int, include_simplex: bool) -> tuple[Complex, ...]:
    seen: dict[str, Complex] = {}
    for k in all_labeled_complexes(m, include_simplex):
        rep = canonical_representative(k)
        seen.setdefault(canonical_key(rep), rep)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_complexes(
    m: int, up_to_iso: bool = True, include_simplex: bool = True
) -> list[Complex]:
    """Census of complexes on [m]; with ``up_to_iso`` each isomorphism class
    appears exactly once, as its canonical representative."""
    if up_to_iso:
        return list(_iso_classes(m, include_simplex))
    return all_labeled_complexes(m, include_simplex)


def _box_masks(c: tuple[int, ...]) -> list[tuple[int, ...]]:
    vecs = list(itertools.product(*(range(ci + 1) for ci in c)))
    vecs.sort(key=lambda a: (sum(a), a))
    return vecs


def enumerate_multicomplexes(c) -> list[Multicomplex]:
    """Every proper multicomplex with the given caps, exactly once."""
    c = tuple(c)
    if sum(c) > 5:
        raise ResourceLimit("multicomplex enumeration needs |c| <= 5")
    vecs = _box_masks(c)
    out = []

    def dominated(a, chosen):
        return any(all(x <= y for x, y in zip(a, g)) or
                   all(y <= x for x, y in zip(a, g)) for g in chosen)

    def rec(start: int, chosen: tuple):
        if chosen and chosen != (c,):
            out.append(Multicomplex(c, tuple(sorted(chosen))))
        for i in range(start, len(vecs)):
            a = vecs[i]
            if dominated(a, chosen):
                continue
            rec(i + 1, chosen + (a,))

    rec(0, ())
    return out


def compositions(total: int) -> list[tuple[int, ...]]:
    """All ordered tuples of positive integers with the given sum."""
    if total == 0:
        return [()]
    out = []
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            out.append((first,) + rest)
    return out


def multicomplex_canonical_key(m: Multicomplex) -> tuple:
    """Canonical form under permutations of variables with equal caps."""
    idx = range(m.nvars)
    best = None
    for perm in itertools.permutations(idx):
        if any(m.c[perm[i]] != m.c[i] for i in idx):
            continue
        relabeled = tuple(sorted(tuple(a[perm[i]] for i in idx) for a in m.max_monomials))
        if best is None or relabeled < best:
            best = relabeled
    return (m.c, best)


# ---------------------------------------------------------------------------
# census records


@dataclass(frozen=True)
class CensusRecord:
    """Digest of one complex: canonical key, classification tags, face
    data, Betti table, and the product-level Golod flags."""

    canonical: str
    tags: tuple[str, ...]
    f: tuple[int, ...]
    h: tuple[int, ...]
    gamma: tuple[int, ...] | None
    betti: tuple[tuple[int, int, int], ...]
    betti_field: int
    flag: bool
    product_golod: bool
    min_non_golod: bool

    def to_dict(self) -> dict:
        return {
            "canonical": self.canonical,
            "tags": list(self.tags),
            "f": list(self.f),
            "h": list(self.h),
            "gamma": list(self.gamma) if self.gamma is not None else None,
            "betti": [list(row) for row in self.betti],
            "betti_field": self.betti_field,
            "flag": self.flag,
            "product_golod": self.product_golod,
            "min_non_golod": self.min_non_golod,
        }


def sphere_record(k: Complex, field_tag: FieldTag = QQ) -> CensusRecord:
    """Record for the (ghost-free) Bier sphere of ``k``."""
    sphere = drop_ghosts(bier_sphere(k))
    tags = classify_bier(k).tags
    return complex_record(sphere, field_tag, tags)


def complex_record(sphere: Complex, field_tag: FieldTag = QQ, tags=()) -> CensusRecord:
    betti = hochster_betti(sphere, field_tag)
    golod, min_non = golod_summary(sphere, field_tag)
    return CensusRecord(
        canonical=canonical_key(sphere),
        tags=tuple(tags),
        f=f_vector(sphere),
        h=h_vector(sphere),
        gamma=gamma_vector(sphere),
        betti=tuple((i, j, r) for (i, j), r in betti.items_sorted()),
        betti_field=field_tag.p,
        flag=is_flag(sphere),
        product_golod=golod,
        min_non_golod=min_non,
    )


# ---------------------------------------------------------------------------
# verification reports


REPORT_SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    suite: str
    instance_count: int
    pass_count: int
    counterexamples: list
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.pass_count + len(self.counterexamples) == self.instance_count

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "suite": self.suite,
            "instances": self.instance_count,
            "passed": self.pass_count,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }


class _Suite:
    """Collects per-instance verdicts and builds the report."""

    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.counterexamples: list = []
        self.details: dict = {}

    def check(self, ok: bool, payload):
        if ok:
            self.passed += 1
        else:
            self.counterexamples.append(payload)

    def report(self) -> VerificationReport:
        return VerificationReport(
            self.name,
            self.passed + len(self.counterexamples),
            self.passed,
            self.counterexamples,
            self.details,
        )


def _census_no_simplex(m: int) -> list[Complex]:
    return enumerate_complexes(m, up_to_iso=True, include_simplex=False)


@lru_cache(maxsize=None)
def _sphere_key(k: Complex) -> str:
    return canonical_key(drop_ghosts(bier_sphere(k)))


def _is_points(k: Complex) -> bool:
    return k.facets != (0,) and all(f.bit_count() == 1 for f in k.facets)


# ---------------------------------------------------------------------------
# the suites


def _suite_bier_1dim(seed: int, sample) -> VerificationReport:
    suite = _Suite("bier-1dim")
    polygon_keys = {canonical_key(cycle(n)): n for n in (3, 4, 5, 6)}
    named = [
        ([[1, 2], [1, 3], [2, 3]], 3),
        ([[1, 2], [2, 3]], 4),
        ([[1, 2]], 4),
        ([[1], [2, 3]], 5),
        ([[1], [2], [3]], 6),
    ]
    found = {}
    for k in _census_no_simplex(3):
        key = _sphere_key(k)
        gon = polygon_keys.get(key)
        suite.check(gon is not None, {"complex": k.facet_sets(), "sphere": key})
        if gon is not None:
            found.setdefault(gon, 0)
            found[gon] += 1
    for gens, gon in named:
        k = make_complex(3, gens)
        got = polygon_keys.get(_sphere_key(k))
        suite.check(got == gon, {"generators": gens, "expected": gon, "got": got})
    suite.details["classes"] = sorted(found)
    suite.check(sorted(found) == [3, 4, 5, 6], {"classes": sorted(found)})
    return suite.report()


def _suite_bier_13types(seed: int, sample) -> VerificationReport:
    suite = _Suite("bier-13types")
    spheres: dict[str, Complex] = {}
    for k in _census_no_simplex(4):
        sphere = drop_ghosts(bier_sphere(k))
        spheres.setdefault(canonical_key(sphere), sphere)
    for key, sphere in sorted(spheres.items()):
        suite.check(
            sphere.dim == 2 and homology_sphere_check(sphere, 3),
            {"sphere": key, "reason": "not a 2-dimensional homology sphere"},
        )
    suite.details["distinct_types"] = len(spheres)
    suite.check(len(spheres) == 13, {"expected": 13, "found": len(spheres)})
    return suite.report()


def _suite_flag_bier(seed: int, sample) -> VerificationReport:
    suite = _Suite("flag-bier")
    kinds: dict[str, int] = {}
    for m in (3, 4, 5):
        for k in _census_no_simplex(m):
            cls = classify_bier(k)
            if not cls.flag:
                continue
            ok = cls.flag_kind is not None
            suite.check(ok, {"m": m, "complex": k.facet_sets()})
            if ok:
                label = f"{cls.flag_kind.family}:n={cls.flag_kind.n}"
                kinds[label] = kinds.get(label, 0) + 1
    suite.details["kinds"] = dict(sorted(kinds.items()))
    return suite.report()


@lru_cache(maxsize=None)
def _murai_census(total: int):
    """(caps, class representative, labeled multiplicity) over all ordered
    cap vectors with the given sum, deduplicated under variable
    permutations that preserve the caps."""
    classes: dict[tuple, list] = {}
    order: list[tuple] = []
    for c in compositions(total):
        for m in enumerate_multicomplexes(c):
            key = multicomplex_canonical_key(m)
            if key not in classes:
                classes[key] = [m, 0]
                order.append(key)
            classes[key][1] += 1
    return tuple((key[0], classes[key][0], classes[key][1]) for key in order)


def _suite_flag_murai(seed: int, sample) -> VerificationReport:
    suite = _Suite("flag-murai")
    kinds: dict[str, int] = {}
    one_dim_classes: set[str] = set()
    for total in (2, 3, 4):
        for _, m, multiplicity in _murai_census(total):
            cls = classify_murai(m)
            if not cls.flag:
                continue
            ok = cls.flag_kind is not None
            suite.check(ok, {"c": m.c, "max_monomials": m.max_monomials})
            if ok:
                label = f"{cls.flag_kind.family}:n={cls.flag_kind.n}"
                kinds[label] = kinds.get(label, 0) + multiplicity
            if total == 3:
                one_dim_classes.add(canonical_key(drop_ghosts(murai_sphere(m))))
    expected = {canonical_key(cycle(n)) for n in (4, 5, 6)}
    suite.details["kinds"] = dict(sorted(kinds.items()))
    suite.details["one_dim_class_count"] = len(one_dim_classes)
    suite.check(
        one_dim_classes == expected,
        {"expected": "boundaries of the 4-, 5- and 6-gon", "found": sorted(one_dim_classes)},
    )
    return suite.report()


def _suite_golod(seed: int, sample) -> VerificationReport:
    """Product-level Golod classification against the combinatorial
    conditions, over the rationals and GF(2), on ghost-free Bier spheres."""
    suite = _Suite("golod")
    verdict_cache: dict[tuple[str, int], tuple[bool, bool]] = {}
    sampled = False
    for m in (3, 4, 5):
        census = _census_no_simplex(m)
        if sample is not None and len(census) > sample:
            census = random.Random(seed).sample(census, sample)
            sampled = True
        for k in census:
            dual = alexander_dual(k)
            expected_golod = k == boundary_simplex(m) or dual == boundary_simplex(m)
            expected_min_non = _is_points(k) or _is_points(dual)
            sphere = drop_ghosts(bier_sphere(k))
            key = canonical_key(sphere)
            mismatches = []
            for tag in (QQ, GF2):
                got = verdict_cache.get((key, tag.p))
                if got is None:
                    got = golod_summary(sphere, tag)
                    verdict_cache[(key, tag.p)] = got
                if got != (expected_golod, expected_min_non):
                    mismatches.append(
                        {
                            "field": tag.p,
                            "got_golod": got[0],
                            "got_min_non_golod": got[1],
                        }
                    )
            suite.check(
                not mismatches,
                {
                    "m": m,
                    "complex": k.facet_sets(),
                    "expected_golod": expected_golod,
                    "expected_min_non_golod": expected_min_non,
                    "mismatches": mismatches,
                },
            )
    suite.details["coverage"] = "sampled" if sampled else "complete"
    return suite.report()


@lru_cache(maxsize=None)
def _bier_sphere_classes(max_m: int) -> dict[str, Complex]:
    out: dict[str, Complex] = {}
    for m in range(3, max_m + 1):
        for k in _census_no_simplex(m):
            sphere = drop_ghosts(bier_sphere(k))
            out.setdefault(canonical_key(sphere), sphere)
    return out


@lru_cache(maxsize=None)
def _murai_sphere_classes(max_total: int) -> dict[str, Complex]:
    out: dict[str, Complex] = {}
    for total in range(1, max_total + 1):
        for _, m, _count in _murai_census(total):
            sphere = drop_ghosts(murai_sphere(m))
            out.setdefault(canonical_key(sphere), sphere)
    return out


def _suite_dehn_sommerville(seed: int, sample) -> VerificationReport:
    suite = _Suite("dehn-sommerville")
    spheres = dict(_bier_sphere_classes(5))
    spheres.update(_murai_sphere_classes(5))
    for key in sorted(spheres):
        suite.check(
            is_dehn_sommerville(spheres[key]),
            {"sphere": key, "h": h_vector(spheres[key])},
        )
    suite.details["sphere_classes"] = len(spheres)
    return suite.report()


def _suite_np_gamma(seed: int, sample) -> VerificationReport:
    """Nevo-Petersen at desk scale: gamma of every flag sphere in scope is
    the f-vector of some flag complex, found by exhaustive search."""
    suite = _Suite("np-gamma")
    spheres = dict(_bier_sphere_classes(5))
    spheres.update(_murai_sphere_classes(5))
    for key in sorted(spheres):
        sphere = spheres[key]
        if not is_flag(sphere):
            continue
        gamma = gamma_vector(sphere)
        if gamma is None:
            suite.check(False, {"sphere": key, "reason": "h-vector not symmetric"})
            continue
        witness = realize_gamma_as_flag_f(gamma)
        suite.check(
            witness is not None,
            {"sphere": key, "gamma": gamma},
        )
    return suite.report()


def _suite_murai_sphere(seed: int, sample) -> VerificationReport:
    suite = _Suite("murai-sphere")
    verdicts: dict[str, bool] = {}
    labeled = 0
    for total in (1, 2, 3, 4, 5):
        for caps, m, multiplicity in _murai_census(total):
            labeled += multiplicity
            sphere = murai_sphere(m)
            key = canonical_key(sphere)
            ok = verdicts.get(key)
            if ok is None:
                ok = sphere.dim == total - 2 and homology_sphere_check(
                    drop_ghosts(sphere), total - 1
                )
                verdicts[key] = ok
            suite.check(ok, {"c": caps, "max_monomials": m.max_monomials})
    suite.details["labeled_multicomplexes"] = labeled
    return suite.report()


def _suite_ideal_consistency(seed: int, sample) -> VerificationReport:
    suite = _Suite("ideal-consistency")
    for total in (1, 2, 3, 4):
        for c in compositions(total):
            for m in enumerate_multicomplexes(c):
                ideal = murai_face_ideal(m)
                sphere = murai_sphere(m)
                ok = squarefree_support_masks(ideal) == minimal_nonfaces(sphere)
                suite.check(ok, {"c": c, "max_monomials": m.max_monomials})
    # caps (1,...,1): the construction equals the Bier sphere on the nose
    relabel_checked = 0
    for m_ground in (1, 2, 3, 4):
        mapping = Isomorphism(tuple(bier_relabeling_to_murai(m_ground)))
        for k in all_labeled_complexes(m_ground, include_simplex=False):
            sphere = bier_sphere(k)
            relabeled = sorted(mapping.apply(f) for f in sphere.facets)
            murai = murai_sphere(multicomplex_of_complex(k))
            suite.check(
                relabeled == list(murai.facets),
                {"m": m_ground, "complex": k.facet_sets()},
            )
            relabel_checked += 1
    suite.details["relabeling_instances"] = relabel_checked
    return suite.report()


def _suite_cubical(seed: int, sample) -> VerificationReport:
    suite = _Suite("cubical")
    for m in (1, 2, 3, 4):
        for k in _census_no_simplex(m):
            sphere = bier_sphere(k)
            z = z_complex(k)
            tops = z.maximal_cells()
            issues = []
            if any(cubical_homology(z)):
                issues.append("disc homology nonzero")
            if sphere.facets != (0,):
                if len(tops) != len(sphere.facets):
                    issues.append("top-cell count differs from facet count")
                rim = boundary_complex(z)
                rim_tops = rim.maximal_cells()
                if len(rim_tops) != (m - 1) * len(sphere.facets):
                    issues.append("boundary top-cell count off")
                expected = [0] * (m - 1)
                if m >= 2:
                    expected[m - 2] = 1
                if cubical_homology(rim) != expected:
                    issues.append("boundary homology is not a sphere")
                if euler_from_cells(rim) != 1 + (-1) ** m:
                    issues.append("boundary Euler characteristic off")
            dual = alexander_dual(k)
            for cell in z.cells:
                if not cell_in_z(cell, k, dual):
                    issues.append("cell fails the membership predicate")
                    break
            if m <= 4:
                predicate_cells = frozenset(
                    cell
                    for cell in itertools.product(range(5), repeat=m)
                    if cell_in_z(cell, k, dual)
                )
                if predicate_cells != z.cells:
                    issues.append("membership predicate admits extra cells")
            suite.check(not issues, {"m": m, "complex": k.facet_sets(), "issues": issues})
    hexagon_z = z_complex(make_complex(3, [[1], [2], [3]]))
    rim = boundary_complex(hexagon_z)
    squares = hexagon_z.maximal_cells()
    verts = [c for c in rim.cells if cell_dim(c) == 0]
    edges = [c for c in rim.cells if cell_dim(c) == 1]
    suite.check(
        len(squares) == 6 and len(verts) == 12 and len(edges) == 12,
        {"squares": len(squares), "vertices": len(verts), "edges": len(edges)},
    )
    return suite.report()


def euler_from_cells(c) -> int:
    by_dim = c.cells_by_dim()
    return sum((-1) ** d * len(lst) for d, lst in enumerate(by_dim))


def _suite_gw_duality(seed: int, sample) -> VerificationReport:
    suite = _Suite("gw-duality")
    points_checked = 0
    for m in (1, 2, 3, 4):
        for k in _census_no_simplex(m):
            report = gw_partition_check(k, resolution=4, seed=seed)
            points_checked += report.grid_points + report.random_points
            suite.check(
                not report.violations,
                {"m": m, "complex": k.facet_sets(), "violations": report.violations[:3]},
            )
    suite.details["points_checked"] = points_checked
    return suite.report()


def _suite_suspension(seed: int, sample) -> VerificationReport:
    suite = _Suite("suspension")
    for m in (1, 2, 3, 4):
        for k in _census_no_simplex(m):
            lhs = bier_sphere(cone(k))
            rhs = suspension(bier_sphere(k))
            suite.check(
                are_isomorphic(lhs, rhs) is not None,
                {"m": m, "complex": k.facet_sets()},
            )
    return suite.report()


SUITES = {
    "bier-1dim": _suite_bier_1dim,
    "bier-13types": _suite_bier_13types,
    "flag-bier": _suite_flag_bier,
    "flag-murai": _suite_flag_murai,
    "golod": _suite_golod,
    "dehn-sommerville": _suite_dehn_sommerville,
    "murai-sphere": _suite_murai_sphere,
    "ideal-consistency": _suite_ideal_consistency,
    "cubical": _suite_cubical,
    "gw-duality": _suite_gw_duality,
    "suspension": _suite_suspension,
    "np-gamma": _suite_np_gamma,
}


def verify(suite: str, seed: int = 0, sample: int | None = None) -> VerificationReport:
    """Run one verification suite; reports are deterministic given the
    arguments.  ``sample`` caps the census size of the heavy suites and is
    flagged in the report details (never silent)."""
    if suite not in SUITES:
        raise InvalidInput(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return SUITES[suite](seed, sample)
