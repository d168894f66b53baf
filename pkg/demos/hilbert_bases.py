"""Minimal generators of the lattice-point semigroups of dual cones.

Run with:  python demos/hilbert_bases.py
"""

from torikit import Cone, Fan, fan_coordinate_semigroup, hilbert_basis

# The free case: the dual of the first quadrant is the first quadrant.
quadrant = Cone.from_rays([(1, 0), (0, 1)])
print("quadrant semigroup:", hilbert_basis(quadrant.dual()).generators)

# The quadric cone chart needs three generators: x, xy and xy^2 in
# exponent form, one more than the rank.
singular = Cone.from_rays([(1, 0), (1, 2)])
s = hilbert_basis(singular.dual())
print("singular chart semigroup:", s.generators)

# A cone with lineality splits into units and a pointed part.
halfspace_dual = Cone.from_rays([(1, 0)], 2).dual()
s = hilbert_basis(halfspace_dual)
print("half-space dual: generators", s.generators, " units", s.units)

# Global functions of a fan: removing the origin from the plane does
# not remove any regular function.
punctured = Fan.from_cones(
    [Cone.from_rays([(1, 0)], 2), Cone.from_rays([(0, 1)], 2)], 2
)
print("punctured plane global functions:", fan_coordinate_semigroup(punctured).generators)

# ... while the projective line only has constants.
proj_line = Fan.from_cones([Cone.from_rays([(1,)]), Cone.from_rays([(-1,)])], 1)
s = fan_coordinate_semigroup(proj_line)
print("projective line global functions:", s.generators, " units:", s.units)
