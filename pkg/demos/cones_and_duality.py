"""Cones, dual cones and faces, all over exact integers.

Run with:  python demos/cones_and_duality.py
"""

from torikit import Cone

# A generator list is canonicalized: (1,1) is interior, (2,0) is not primitive.
c = Cone.from_rays([(2, 0), (0, 1), (1, 1)])
print("canonical rays of cone((2,0),(0,1),(1,1)):", c.rays)

# The dual of the quadric-cone chart cone((1,0),(1,2)).
singular = Cone.from_rays([(1, 0), (1, 2)])
print("dual rays:", singular.dual().rays)
print("smooth?", singular.is_smooth(), " simplex?", singular.is_simplex())

# Opposite generators produce lineality; the line has no extremal rays.
line = Cone.from_rays([(1, 0), (-1, 0)])
print("line: rays =", line.rays, " lineality =", line.lineality)

# The face lattice of the first quadrant.
quadrant = Cone.from_rays([(1, 0), (0, 1)])
for face in quadrant.faces():
    print(f"face of dim {face.dim()}: rays {face.rays}")

# Membership is decided by the halfspace description.
print("(3,5) in quadrant:", quadrant.contains((3, 5)))
print("(1,-1) in dual of the singular cone:", singular.dual().contains((1, -1)))
