"""Bistellar moves and reduction certificates.

A move replaces the star of a simplex whose link is a simplex boundary;
the four move types in dimension 2 are vertex insertion/removal and the
edge flip.  Any combinatorial sphere of dimension <= 3 can be driven back
to a simplex boundary, and the certificate replays.
"""

from bistellar import (
    apply_move,
    boundary_of_simplex,
    enumerate_moves,
    join,
    orient,
    reduce_to_boundary,
    replay,
    sphere_from_move,
)
from bistellar.library import OCTAHEDRON_FACETS
from bistellar.simplicial import build_complex

octa = orient(build_complex(OCTAHEDRON_FACETS))
moves = enumerate_moves(octa)
flips = [m for m in moves if len(m.sigma) == 2]
print(f"octahedron: {len(moves)} moves ({len(flips)} edge flips, "
      f"{sum(1 for m in moves if len(m.sigma) == 3)} subdivisions)")

flip = flips[0]
after = apply_move(flip)
print("after flipping", flip.describe(), "degrees are",
      sorted(after.degree(v) for v in after.vertices))

# the sphere of a move: one dimension up, links of the two fresh vertices
# are the before/after spheres
Lb = sphere_from_move(flip)
print("sphere of the flip:", Lb.f_vector, "(a 3-sphere on", len(Lb.vertices), "vertices)")

# reduce the 16-cell to the boundary of the 4-simplex and replay
s0 = boundary_of_simplex(1)
four, _, _ = join(s0, s0)
cross, _, _ = join(four, four)
cert = reduce_to_boundary(orient(cross), seed=3)
print(f"\n16-cell reduction: {len(cert.moves)} moves")
final, states = replay(cert)
print("replayed vertex counts:", [len(s.vertices) for s in states])
for s in range(3):
    alt = reduce_to_boundary(orient(cross), seed=s)
    print(f"  seed {s}: {len(alt.moves)} moves")
