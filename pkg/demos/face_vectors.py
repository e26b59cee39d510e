"""f-, h- and gamma-vectors of the spheres in scope, and the brute-force
flag realization of gamma-vectors.

Run:  python3 demos/face_vectors.py
"""

from bierlab import (
    boundary_simplex,
    cycle,
    f_vector,
    gamma_vector,
    h_vector,
    is_dehn_sommerville,
    realize_gamma_as_flag_f,
)
from bierlab.complexes import cross_polytope, join

print("== the hexagon ==")
hexagon = cycle(6)
print("f =", f_vector(hexagon), " h =", h_vector(hexagon),
      " gamma =", gamma_vector(hexagon))
witness = realize_gamma_as_flag_f(gamma_vector(hexagon))
print("gamma is the f-vector of the flag complex", witness.facet_sets())

print()
print("== a non-flag sphere can have a negative gamma entry ==")
print("boundary of the triangle: gamma =", gamma_vector(boundary_simplex(3)))
print("no flag realization exists:",
      realize_gamma_as_flag_f(gamma_vector(boundary_simplex(3))))

print()
print("== joins multiply h-polynomials ==")
prism_nerve = join(cross_polytope(1), cycle(5))
print("h of S^0:", h_vector(cross_polytope(1)))
print("h of the pentagon:", h_vector(cycle(5)))
print("h of their join:  ", h_vector(prism_nerve))
print("Dehn-Sommerville symmetric:", is_dehn_sommerville(prism_nerve))
print("gamma of the join:", gamma_vector(prism_nerve))
