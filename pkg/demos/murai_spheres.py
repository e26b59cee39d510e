"""Multicomplexes, c-duality, polarization, and the generalized Bier
sphere of a proper multicomplex.

Run:  python3 demos/murai_spheres.py
"""

from bierlab import (
    c_dual,
    make_multicomplex,
    minimal_nonfaces,
    murai_face_ideal,
    murai_sphere,
    nonmember_ideal,
    polarize,
    star_polarize,
    vertices_of,
)
from bierlab.multicomplexes import murai_vertex_labels, squarefree_support_masks

print("== caps (2,1): the multicomplex generated by x and y ==")
mc = make_multicomplex((2, 1), [(1, 0), (0, 1)])
print("members:", mc.members())
print("c-dual: ", c_dual(mc).max_monomials, "(self-dual)")

ideal = nonmember_ideal(mc)
print("ideal of non-members:", ideal.generator_strings())
print("bottom polarization: ", polarize(ideal, mc.c).generator_strings())
print("top polarization:    ", star_polarize(ideal, mc.c).generator_strings())

print()
print("== its Murai sphere is a pentagon ==")
sphere = murai_sphere(mc)
labels = murai_vertex_labels(mc.c)
print("vertex labels:", labels)
for facet in sphere.facet_sets():
    print("  edge", [labels[v - 1] for v in facet])

print()
print("== the face ideal reproduces the minimal non-faces ==")
face_ideal = murai_face_ideal(mc)
print("face ideal:", face_ideal.generator_strings())
assert squarefree_support_masks(face_ideal) == minimal_nonfaces(sphere)
print("supports equal the sphere's minimal non-faces:",
      [vertices_of(s) for s in minimal_nonfaces(sphere)])

print()
print("== a single variable with cap 3 gives the square ==")
mc = make_multicomplex((3,), [(1,)])
print("sphere facets:", murai_sphere(mc).facet_sets())
