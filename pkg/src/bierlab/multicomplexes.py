"""c-multicomplexes, c-duality, monomial ideals with the two polarizations,
and the generalized Bier sphere of a proper multicomplex.

Exponent vectors are int tuples bounded componentwise by the cap vector c.
The sphere lives on the flattened level set: variable block i contributes
the c_i + 1 ground elements (i, 0), ..., (i, c_i), flattened to
offset_i + j + 1 with offset_i the sum of the earlier block sizes, so
output files are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import Complex
from .duality import BierClassification, match_flag_family
from .complexes import drop_ghosts, is_flag
from .errors import InvalidInput, UndefinedDual


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Multicomplex:
    """Cap vector plus the divisibility-maximal monomials (an antichain)."""

    c: tuple[int, ...]
    max_monomials: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.c or any(x < 1 for x in self.c):
            raise InvalidInput("cap vector entries must be positive")
        if not self.max_monomials:
            raise InvalidInput("a multicomplex always contains the constant monomial")
        for a in self.max_monomials:
            if len(a) != len(self.c) or any(x < 0 for x in a):
                raise InvalidInput(f"bad exponent vector {a}")
            if not _divides(a, self.c):
                raise InvalidInput(f"exponent vector {a} exceeds the caps {self.c}")
        for a, b in itertools.combinations(self.max_monomials, 2):
            if _divides(a, b) or _divides(b, a):
                raise InvalidInput("maximal monomials must form a divisibility antichain")
        if self.max_monomials != tuple(sorted(self.max_monomials)):
            raise InvalidInput("maximal monomials must be sorted")

    @property
    def nvars(self) -> int:
        return len(self.c)

    def contains(self, a: tuple[int, ...]) -> bool:
        if len(a) != self.nvars or any(x < 0 for x in a):
            raise InvalidInput(f"bad exponent vector {a}")
        if not _divides(a, self.c):
            raise InvalidInput(f"exponent vector {a} exceeds the caps {self.c}")
        return any(_divides(a, g) for g in self.max_monomials)

    def members(self) -> list[tuple[int, ...]]:
        """All monomials of the multicomplex, in the graded box order."""
        out = [
            a
            for a in _box(self.c)
            if any(_divides(a, g) for g in self.max_monomials)
        ]
        return out


def _box(c: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All exponent vectors bounded by c, sorted by (degree, tuple)."""
    vecs = list(itertools.product(*(range(ci + 1) for ci in c)))
    vecs.sort(key=lambda a: (sum(a), a))
    return vecs


def make_multicomplex(c, gens) -> Multicomplex:
    """Multicomplex generated by exponent vectors; dominated ones removed."""
    c = tuple(c)
    gens = [tuple(g) for g in gens]
    if not gens:
        gens = [tuple(0 for _ in c)]
    for g in gens:
        if len(g) != len(c) or any(x < 0 for x in g):
            raise InvalidInput(f"bad exponent vector {g}")
        if not _divides(g, c):
            raise InvalidInput(f"generator {g} exceeds the caps {c}")
    maximal = tuple(
        sorted(
            g
            for g in set(gens)
            if not any(h != g and _divides(g, h) for h in gens)
        )
    )
    return Multicomplex(c, maximal)


def is_full(m: Multicomplex) -> bool:
    return m.max_monomials == (m.c,)


def minimal_nonmembers(m: Multicomplex) -> list[tuple[int, ...]]:
    """Divisibility-minimal monomials outside the multicomplex: exactly the
    minimal generating set of the ideal of non-members.  Empty iff full."""
    out = []
    for a in _box(m.c):
        if m.contains(a):
            continue
        lower_all_in = True
        for i, x in enumerate(a):
            if x:
                b = a[:i] + (x - 1,) + a[i + 1:]
                if not m.contains(b):
                    lower_all_in = False
                    break
        if lower_all_in:
            out.append(a)
    return out


def c_dual(m: Multicomplex) -> Multicomplex:
    """Alexander dual w.r.t. the caps: maximal monomials are the
    complements c - g of the minimal non-members g.  An involution."""
    nonmembers = minimal_nonmembers(m)
    if not nonmembers:
        raise UndefinedDual("the full multicomplex has no dual")
    comp = [tuple(ci - x for ci, x in zip(m.c, g)) for g in nonmembers]
    return Multicomplex(m.c, tuple(sorted(comp)))


# ---------------------------------------------------------------------------
# monomial ideals and polarization


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generating set over a named variable list."""

    variables: tuple[str, ...]
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != len(self.variables) or any(x < 0 for x in g):
                raise InvalidInput(f"bad generator exponent vector {g}")
        for a, b in itertools.combinations(self.generators, 2):
            if _divides(a, b) or _divides(b, a):
                raise InvalidInput("generators must be divisibility-minimal")

    def generator_strings(self) -> list[str]:
        out = []
        for g in self.generators:
            parts = [
                self.variables[i] if e == 1 else f"{self.variables[i]}^{e}"
                for i, e in enumerate(g)
                if e
            ]
            out.append("*".join(parts) if parts else "1")
        return out


def _minimalize(gens) -> tuple[tuple[int, ...], ...]:
    uniq = sorted(set(gens))
    return tuple(
        g for g in uniq if not any(h != g and _divides(h, g) for h in uniq)
    )


def nonmember_ideal(m: Multicomplex) -> MonomialIdeal:
    """The ideal generated by every monomial outside the multicomplex; its
    minimal generators are the minimal non-members."""
    variables = tuple(f"x{i + 1}" for i in range(m.nvars))
    return MonomialIdeal(variables, tuple(minimal_nonmembers(m)))


def polarized_variables(c: tuple[int, ...]) -> tuple[str, ...]:
    return tuple(
        f"x{i + 1}_{j}" for i in range(len(c)) for j in range(c[i] + 1)
    )


def block_offsets(c: tuple[int, ...]) -> list[int]:
    offs = [0]
    for ci in c:
        offs.append(offs[-1] + ci + 1)
    return offs


def murai_vertex(c: tuple[int, ...], i: int, j: int) -> int:
    """1-based flattened label of level j of variable block i (0-based i)."""
    if not 0 <= j <= c[i]:
        raise InvalidInput(f"level {j} outside block {i} of caps {c}")
    return block_offsets(c)[i] + j + 1


def murai_vertex_labels(c: tuple[int, ...]) -> list[str]:
    return [f"x{i + 1}^({j})" for i in range(len(c)) for j in range(c[i] + 1)]


def _polarize_one(a: tuple[int, ...], c: tuple[int, ...], star: bool) -> tuple[int, ...]:
    offs = block_offsets(c)
    n = offs[-1]
    vec = [0] * n
    for i, e in enumerate(a):
        if e > c[i] + 1:
            raise InvalidInput(
                f"exponent {e} exceeds the polarization bound {c[i] + 1}"
            )
        if star:
            levels = range(c[i], c[i] - e, -1)
        else:
            levels = range(0, e)
        for j in levels:
            vec[offs[i] + j] = 1
    return tuple(vec)


def polarize(ideal: MonomialIdeal, c) -> MonomialIdeal:
    """Bottom polarization: x_i^e becomes x_{i,0} ... x_{i,e-1}."""
    c = tuple(c)
    gens = [_polarize_one(g, c, star=False) for g in ideal.generators]
    return MonomialIdeal(polarized_variables(c), _minimalize(gens))


def star_polarize(ideal: MonomialIdeal, c) -> MonomialIdeal:
    """Top polarization: x_i^e becomes x_{i,c_i} ... x_{i,c_i-e+1}."""
    c = tuple(c)
    gens = [_polarize_one(g, c, star=True) for g in ideal.generators]
    return MonomialIdeal(polarized_variables(c), _minimalize(gens))


def squarefree_support_masks(ideal: MonomialIdeal) -> list[int]:
    """Supports of a squarefree ideal's generators as vertex bitmasks."""
    out = []
    for g in ideal.generators:
        if any(e > 1 for e in g):
            raise InvalidInput("ideal is not squarefree")
        mask = 0
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
        out.append(mask)
    return sorted(out, key=lambda x: (x.bit_count(), x))


# ---------------------------------------------------------------------------
# the generalized Bier sphere


def murai_sphere(m: Multicomplex) -> Complex:
    """Sphere of a proper multicomplex on the flattened level set.

    Facets: for each member monomial a, each variable i and level j with
    a_i < j <= c_i such that bumping a_i to j leaves the multicomplex, take
    the whole level set minus the levels of a minus (i, j).  The rule's
    output is checked to be an antichain of pairwise distinct sets.
    """
    if is_full(m):
        raise UndefinedDual("the full multicomplex has no sphere")
    c = m.c
    offs = block_offsets(c)
    n = offs[-1]
    full = (1 << n) - 1
    gens = []
    for a in m.members():
        removed = 0
        for i, e in enumerate(a):
            removed |= 1 << (offs[i] + e)
        for i, e in enumerate(a):
            for j in range(e + 1, c[i] + 1):
                bumped = a[:i] + (j,) + a[i + 1:]
                if not m.contains(bumped):
                    gens.append(full ^ removed ^ (1 << (offs[i] + j)))
    assert len(gens) == len(set(gens))
    sphere = Complex.from_masks(n, gens)
    assert len(sphere.facets) == len(gens)
    return sphere


def murai_face_ideal(m: Multicomplex) -> MonomialIdeal:
    """Face ideal of the sphere: polarization of the non-member ideal, plus
    star-polarization of the dual's, plus the polarized pure powers
    x_i^(c_i + 1); reduced to minimal squarefree generators."""
    if is_full(m):
        raise UndefinedDual("the full multicomplex has no sphere")
    c = m.c
    gens = [_polarize_one(g, c, star=False) for g in minimal_nonmembers(m)]
    gens += [
        _polarize_one(g, c, star=True) for g in minimal_nonmembers(c_dual(m))
    ]
    for i in range(len(c)):
        power = tuple(c[i] + 1 if t == i else 0 for t in range(len(c)))
        gens.append(_polarize_one(power, c, star=False))
    return MonomialIdeal(polarized_variables(c), _minimalize(gens))


def multicomplex_of_complex(k: Complex) -> Multicomplex:
    """The caps-(1,...,1) multicomplex whose monomials are the faces."""
    caps = tuple(1 for _ in range(k.m))
    gens = [
        tuple(1 if f & (1 << i) else 0 for i in range(k.m)) for f in k.facets
    ]
    return make_multicomplex(caps, gens)


def bier_relabeling_to_murai(m_ground: int) -> list[int]:
    """Map from Bier-sphere labels on [2m] to flattened caps-(1,..,1) labels:
    vertex i goes to 2i-1 and the primed copy m+i goes to 2i."""
    out = [0] * (2 * m_ground)
    for i in range(1, m_ground + 1):
        out[i - 1] = 2 * i - 1
        out[m_ground + i - 1] = 2 * i
    return out


def classify_murai(m: Multicomplex) -> BierClassification:
    """Flag family of the sphere, by isomorphism against the references;
    everything else is 'other'."""
    sphere = murai_sphere(m)
    flag = is_flag(sphere)
    kind = match_flag_family(drop_ghosts(sphere)) if flag else None
    return BierClassification(False, None, flag, kind)
