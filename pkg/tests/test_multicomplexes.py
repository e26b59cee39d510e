import pytest

from bierlab.census import compositions, enumerate_multicomplexes
from bierlab.complexes import (
    Isomorphism,
    are_isomorphic,
    cross_polytope,
    cycle,
    drop_ghosts,
    make_complex,
    mask_of,
    minimal_nonfaces,
)
from bierlab.duality import FlagKind, bier_sphere
from bierlab.errors import InvalidInput, UndefinedDual
from bierlab.multicomplexes import (
    MonomialIdeal,
    Multicomplex,
    bier_relabeling_to_murai,
    c_dual,
    classify_murai,
    make_multicomplex,
    minimal_nonmembers,
    multicomplex_of_complex,
    murai_face_ideal,
    murai_sphere,
    murai_vertex,
    nonmember_ideal,
    polarize,
    squarefree_support_masks,
    star_polarize,
)


def mc(c, gens):
    return make_multicomplex(c, gens)


def test_contains_and_reduction():
    m = mc((2, 1), [(1, 0)])
    assert m.max_monomials == ((1, 0),)
    assert not m.contains((2, 0))
    assert m.contains((0, 0))
    assert mc((3,), [(1,), (3,)]).max_monomials == ((3,),)


def test_contains_rejects_bad_vectors():
    m = mc((2, 1), [(1, 0)])
    with pytest.raises(InvalidInput):
        m.contains((0, 2))
    with pytest.raises(InvalidInput):
        make_multicomplex((2, 1), [(3, 0)])


def test_minimal_nonmembers():
    assert minimal_nonmembers(mc((2, 1), [(1, 0)])) == [(0, 1), (2, 0)]
    assert minimal_nonmembers(mc((1, 1, 1), [(1, 0, 0)])) == [(0, 0, 1), (0, 1, 0)]
    assert minimal_nonmembers(mc((3,), [(1,)])) == [(2,)]
    assert minimal_nonmembers(mc((2,), [(2,)])) == []


def test_c_dual_examples():
    assert c_dual(mc((3,), [(1,)])) == mc((3,), [(1,)])
    assert c_dual(mc((2, 1), [(0, 1)])) == mc((2, 1), [(1, 1)])
    three = mc((1, 1, 1), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert c_dual(three) == three
    # with caps (2,1) the multicomplex <x> has dual <x^2, y>
    assert c_dual(mc((2, 1), [(1, 0)])) == mc((2, 1), [(2, 0), (0, 1)])


def test_c_dual_involution_and_generator_lemma():
    for total in (1, 2, 3, 4, 5):
        for caps in compositions(total):
            for m in enumerate_multicomplexes(caps):
                dual = c_dual(m)
                assert c_dual(dual) == m
                # minimal generators of the dual ideal are the complements
                # of the maximal monomials
                expected = {
                    tuple(ci - x for ci, x in zip(caps, g)) for g in m.max_monomials
                }
                assert set(minimal_nonmembers(dual)) == expected


def test_c_dual_of_full_rejected():
    with pytest.raises(UndefinedDual):
        c_dual(mc((2,), [(2,)]))


def test_polarize_examples():
    ideal = MonomialIdeal(("x1",), ((2,),))
    assert polarize(ideal, (2,)).generators == ((1, 1, 0),)
    assert star_polarize(ideal, (2,)).generators == ((0, 1, 1),)
    # pure power at the cap + 1
    ideal = MonomialIdeal(("x1",), ((2,),))
    assert polarize(ideal, (1,)).generators == ((1, 1),)
    with pytest.raises(InvalidInput):
        polarize(MonomialIdeal(("x1",), ((3,),)), (1,))


def test_murai_vertex_flattening():
    caps = (2, 1)
    assert [murai_vertex(caps, 0, j) for j in range(3)] == [1, 2, 3]
    assert [murai_vertex(caps, 1, j) for j in range(2)] == [4, 5]
    with pytest.raises(InvalidInput):
        murai_vertex(caps, 1, 2)


def test_murai_sphere_pentagon():
    m = mc((2, 1), [(1, 0), (0, 1)])
    assert c_dual(m) == m
    sphere = murai_sphere(m)
    expected = make_complex(5, [[2, 5], [1, 5], [1, 3], [3, 4], [2, 4]])
    assert sphere == expected
    assert are_isomorphic(sphere, cycle(5)) is not None


def test_murai_sphere_single_variable():
    sphere = murai_sphere(mc((3,), [(1,)]))
    assert are_isomorphic(sphere, cycle(4)) is not None
    assert sphere.m == 4


def test_murai_sphere_dimension():
    for total in (1, 2, 3, 4):
        for caps in compositions(total):
            for m in enumerate_multicomplexes(caps):
                assert murai_sphere(m).dim == total - 2


def test_murai_sphere_of_full_rejected():
    with pytest.raises(UndefinedDual):
        murai_sphere(mc((2,), [(2,)]))


def test_murai_reduces_to_bier_for_unit_caps():
    for k in [
        make_complex(3, [[1], [2], [3]]),
        make_complex(3, [[1, 2], [2, 3]]),
        make_complex(4, [[1, 2], [3, 4]]),
    ]:
        relabel = Isomorphism(tuple(bier_relabeling_to_murai(k.m)))
        sphere = bier_sphere(k)
        relabeled = sorted(relabel.apply(f) for f in sphere.facets)
        assert relabeled == list(murai_sphere(multicomplex_of_complex(k)).facets)


def test_murai_face_ideal_pentagon():
    ideal = murai_face_ideal(mc((2, 1), [(1, 0), (0, 1)]))
    assert ideal.generator_strings() == [
        "x2_0*x2_1",
        "x1_2*x2_1",
        "x1_1*x1_2",
        "x1_0*x2_0",
        "x1_0*x1_1",
    ]


def test_murai_face_ideal_cases_with_caps_2_1():
    # max(M) = {y} is the single-generator case with c_i = 2: the ideal is
    # (x1_0) + (x1_2 x1_1) + (x2_0 x2_1)
    ideal = murai_face_ideal(mc((2, 1), [(0, 1)]))
    assert set(ideal.generator_strings()) == {"x1_0", "x1_1*x1_2", "x2_0*x2_1"}
    # max(M) = {x}: computed honestly from the three families
    ideal = murai_face_ideal(mc((2, 1), [(1, 0)]))
    assert set(ideal.generator_strings()) == {"x1_0*x1_1", "x2_0", "x1_2*x2_1"}


def test_face_ideal_supports_match_minimal_nonfaces():
    for total in (2, 3, 4):
        for caps in compositions(total):
            for m in enumerate_multicomplexes(caps):
                supports = squarefree_support_masks(murai_face_ideal(m))
                assert supports == minimal_nonfaces(murai_sphere(m))


def test_nonmember_ideal():
    ideal = nonmember_ideal(mc((2, 1), [(1, 0)]))
    assert ideal.generators == ((0, 1), (2, 0))
    assert set(ideal.generator_strings()) == {"x2", "x1^2"}


def test_classify_murai_pentagon():
    cls = classify_murai(mc((2, 1), [(1, 0), (0, 1)]))
    assert cls.flag_kind == FlagKind("cube_x_p5", 0)


def test_classify_murai_square_from_unit_caps():
    cls = classify_murai(mc((1, 1, 1), [(1, 1, 0)]))
    assert cls.flag_kind == FlagKind("cube", 2)


def test_classify_murai_cross_polytope_with_ghost():
    # single generator (x_i^{c_i})^c with c_i = 2: the sphere is the
    # boundary of a cross-polytope missing the bottom level of block i
    m = mc((2, 1), [(0, 1)])
    sphere = murai_sphere(m)
    assert mask_of([1]) in minimal_nonfaces(sphere)  # x1^(0) is a ghost
    assert are_isomorphic(drop_ghosts(sphere), cross_polytope(2)) is not None
    assert classify_murai(m).flag_kind == FlagKind("cube", 2)


def test_murai_sphere_invariant_under_variable_permutation():
    a = murai_sphere(mc((2, 1), [(1, 0)]))
    b = murai_sphere(mc((1, 2), [(0, 1)]))
    assert are_isomorphic(a, b) is not None


def test_antichain_validation():
    with pytest.raises(InvalidInput):
        Multicomplex((2, 1), ((1, 0), (2, 0)))
    with pytest.raises(InvalidInput):
        Multicomplex((2, 1), ())
