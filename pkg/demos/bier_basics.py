"""Tour of the core constructions: complexes, Alexander duality, and the
four one-dimensional Bier spheres.

Run:  python3 demos/bier_basics.py
"""

from bierlab import (
    alexander_dual,
    bier_minimal_nonfaces,
    bier_sphere,
    cycle,
    drop_ghosts,
    are_isomorphic,
    make_complex,
    minimal_nonfaces,
    points,
    vertices_of,
)


def show(mask_list):
    return [vertices_of(s) for s in mask_list]


print("== the 5-cycle and its minimal non-faces ==")
c5 = cycle(5)
print("facets:", c5.facet_sets())
print("minimal non-faces:", show(minimal_nonfaces(c5)))

print()
print("== Alexander duality is an involution ==")
path = make_complex(3, [[1, 2], [2, 3]])
dual = alexander_dual(path)
print("path on [3]:", path.facet_sets())
print("its dual:   ", dual.facet_sets(), "(a single point; 1 and 3 are ghosts)")
print("dual of the dual:", alexander_dual(dual).facet_sets())

print()
print("== one-dimensional Bier spheres are the four small polygons ==")
for gens, name in [
    ([[1, 2], [1, 3], [2, 3]], "triangle"),
    ([[1, 2], [2, 3]], "square"),
    ([[1], [2, 3]], "pentagon"),
    ([[1], [2], [3]], "hexagon"),
]:
    k = make_complex(3, gens)
    sphere = drop_ghosts(bier_sphere(k))
    gon = next(
        n for n in (3, 4, 5, 6) if are_isomorphic(sphere, cycle(n)) is not None
    )
    print(f"K = {gens}  ->  {gon}-gon  (claimed: {name})")

print()
print("== the face ideal of a Bier sphere, by the three generator families ==")
k = points(3, 3)
print("Bier(3 points) facets:", bier_sphere(k).facet_sets())
print("minimal non-faces (primed labels are 4,5,6):")
print(show(bier_minimal_nonfaces(k)))
