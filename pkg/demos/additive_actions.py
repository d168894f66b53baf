"""Homogeneous locally nilpotent derivations and their additive actions.

Run with:  python demos/additive_actions.py
"""

from torikit import (
    AlgebraElement,
    Cone,
    Fan,
    HomogeneousDerivation,
    boundary_projection,
    build_ga_actions,
    enumerate_roots,
    hilbert_basis,
)
from torikit.lattice import determinant

# On the affine line the only admissible degree is -1 and the derivation
# is d/dx: it sends x^m to m x^(m-1).
line = hilbert_basis(Cone.from_rays([(1,)]).dual())
print("degrees on the line within radius 5:", enumerate_roots(line, (1,), 5))
d = HomogeneousDerivation((1,), (-1,), line)
print("d(x^3) =", d(AlgebraElement.monomial((3,))))
print("exp(d) at time 1 sends x to", d.exponentiate(1, AlgebraElement.monomial((1,))))

# On the plane, degree (-1,1) gives x2 d/dx1.
plane = hilbert_basis(Cone.from_rays([(1, 0), (0, 1)]).dual())
d2 = HomogeneousDerivation((1, 0), (-1, 1), plane)
print("\nx2 d/dx1 of x1^2:", d2(AlgebraElement.monomial((2, 0))))
print("nilpotency order on x1^2:", d2.nilpotency_order((2, 0)))

# The full construction on the punctured plane: two independent
# characters, and every derivation kills the boundary divisor.
punctured = Fan.from_cones(
    [Cone.from_rays([(1, 0)], 2), Cone.from_rays([(0, 1)], 2)], 2
)
family = build_ga_actions(punctured)
print("\npunctured plane:")
print("  chosen ray:", family.chosen_ray)
print("  boundary rays:", family.boundary_rays)
print("  characters:", family.characters,
      " det =", determinant(family.characters))
for deriv in family.derivations:
    images = {m: deriv(AlgebraElement.monomial(m)) for m in family.semigroup.generators}
    killed = all(
        boundary_projection(rho, family.semigroup, img).is_zero()
        for rho in family.boundary_rays
        for img in images.values()
    )
    print(f"  degree {deriv.degree}: fixes boundary = {killed}")
