"""Fan-level invariants: class group, Euler characteristic, quasi-affineness.

Run with:  python demos/fan_invariants.py
"""

from torikit import Cone, Fan


def show(name, fan):
    report = fan.report()
    verdict = report.verdict
    status = "quasi-affine" if verdict.quasi_affine else f"not quasi-affine ({verdict.failed_step})"
    print(f"{name:24s} edges={report.edge_count}  class rank={report.class_rank}  "
          f"chi={report.euler_characteristic}  torus factor={report.torus_rank}  {status}")


e1, e2 = (1, 0), (0, 1)

show("affine plane", Fan.from_cones([Cone.from_rays([e1, e2])], 2))
show("punctured plane", Fan.from_cones([Cone.from_rays([e1], 2), Cone.from_rays([e2], 2)], 2))
show("projective line", Fan.from_cones([Cone.from_rays([(1,)]), Cone.from_rays([(-1,)])], 1))
show("blow-up of the plane", Fan.from_cones(
    [Cone.from_rays([e1, (1, 1)]), Cone.from_rays([e2, (1, 1)])], 2))
show("Hirzebruch surface F1", Fan.from_cones(
    [Cone.from_rays([e1, e2]), Cone.from_rays([e2, (-1, 1)]),
     Cone.from_rays([(-1, 1), (0, -1)]), Cone.from_rays([e1, (0, -1)])], 2))
show("2-torus", Fan.from_cones([], 2))
show("line times torus", Fan.from_cones([Cone.from_rays([e1], 2)], 2))

# Fixed points of finite p-subgroups of the torus: applicable whenever p
# does not divide the Euler characteristic.
plane = Fan.from_cones([Cone.from_rays([e1, e2])], 2)
witness = plane.fixed_point_witness(2)
print("\nfixed-point witness for p=2 on the plane:",
      [c.rays for c in witness.fixed_cones])
proj_line = Fan.from_cones([Cone.from_rays([(1,)]), Cone.from_rays([(-1,)])], 1)
print("p=2 on the projective line applicable?",
      proj_line.fixed_point_witness(2).applicable)
