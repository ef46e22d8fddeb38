"""Complexes, links, joins and subdivisions.

Build small complexes from facet lists and walk through the local
operations everything else in the library is made of.
"""

from bistellar import (
    barycentric_subdivision,
    boundary_of_simplex,
    build_complex,
    cone,
    is_orientable,
    join,
    orient,
)
from bistellar.library import RP2_6_FACETS

# ---------------------------------------------------------------------------
# the boundary of a tetrahedron: the smallest 2-sphere
# ---------------------------------------------------------------------------

d3 = boundary_of_simplex(3)
print("boundary of the tetrahedron")
print("  f-vector:", d3.f_vector, " Euler characteristic:", d3.euler_characteristic)
print("  link of vertex 0:", d3.link((0,)).f_vector, "(the opposite triangle's boundary)")

# ---------------------------------------------------------------------------
# joins: sphere * sphere = sphere
# ---------------------------------------------------------------------------

s0 = boundary_of_simplex(1)
square, _, _ = join(s0, s0)
print("\nS0 * S0:", square.f_vector, "(a 4-gon)")
octa, _, _ = join(square, s0)
print("S0 * S0 * S0:", octa.f_vector, "(the octahedron)")
print("cone over a triangle boundary:", cone(boundary_of_simplex(2)).f_vector)

# ---------------------------------------------------------------------------
# the 6-vertex projective plane is not orientable
# ---------------------------------------------------------------------------

rp2 = build_complex(RP2_6_FACETS)
print("\n6-vertex projective plane")
print("  f-vector:", rp2.f_vector, " chi:", rp2.euler_characteristic)
print("  orientable:", is_orientable(rp2))

oc = orient(octa)
print("octahedron orientation signs:", sorted(oc.facet_signs.values()))

# ---------------------------------------------------------------------------
# barycentric subdivision
# ---------------------------------------------------------------------------

sub, back = barycentric_subdivision(d3)
print("\nbarycentric subdivision of the tetrahedron boundary")
print("  f-vector:", sub.f_vector, " chi:", sub.euler_characteristic)
print("  vertex 0 of the subdivision came from face", back[0])
