"""Rational polyhedral cones with exact dual-description conversion.

A cone is stored canonically: a Hermite-form basis of the saturated
lineality lattice plus the primitive extremal rays of the pointed
quotient, sorted lexicographically.  Equality of cones is therefore
plain data equality.  The V<->H conversion is an incremental double
description computation over exact integers.
"""

from __future__ import annotations

from .errors import DimensionError, IntegrityError, PreconditionError
from .lattice import (
    Vec,
    matrix_rank,
    neg,
    pairing,
    primitive,
    saturated_span,
    scale,
    smith_normal_form,
    sub,
    vector,
)


def _dd(rank: int, inequalities, equations) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """V-description of {x : <a,x> >= 0 for a in inequalities, <b,x> = 0 for b in equations}.

    Returns (lineality basis, extremal rays), both canonicalized.
    Halfspaces are inserted in lexicographic order; adjacency of rays is
    decided by the combinatorial zero-set test, which is exact for the
    extremal-ray invariant maintained here.
    """
    lineality: list[Vec] = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    rays: list[Vec] = []
    processed: list[Vec] = []

    for b in sorted({vector(b) for b in equations if any(b)}):
        vals = [pairing(b, l) for l in lineality]
        piv = next((i for i, v in enumerate(vals) if v), None)
        if piv is None:
            continue
        l0, d0 = lineality[piv], vals[piv]
        lineality = [
            primitive(sub(scale(d0, l), scale(v, l0)))
            for i, (l, v) in enumerate(zip(lineality, vals))
            if i != piv
        ]

    for a in sorted({vector(a) for a in inequalities if any(a)}):
        vals = [pairing(a, l) for l in lineality]
        piv = next((i for i, v in enumerate(vals) if v), None)
        if piv is not None:
            # The halfspace cuts the lineality space: one direction of the
            # pivot line becomes a ray, everything else is projected into
            # the bounding hyperplane.
            l0, d0 = lineality[piv], vals[piv]
            if d0 < 0:
                l0, d0 = neg(l0), -d0
            lineality = [
                primitive(sub(scale(d0, l), scale(v, l0)))
                for i, (l, v) in enumerate(zip(lineality, vals))
                if i != piv
            ]
            rays = [primitive(sub(scale(d0, r), scale(pairing(a, r), l0))) for r in rays]
            rays.append(primitive(l0))
        else:
            pos = [r for r in rays if pairing(a, r) > 0]
            zer = [r for r in rays if pairing(a, r) == 0]
            negs = [r for r in rays if pairing(a, r) < 0]
            if negs:
                tight = {
                    r: frozenset(i for i, c in enumerate(processed) if pairing(c, r) == 0)
                    for r in rays
                }
                fresh: list[Vec] = []
                for p in pos:
                    for q in negs:
                        common = tight[p] & tight[q]
                        if any(r is not p and r is not q and common <= tight[r] for r in rays):
                            continue
                        w = primitive(sub(scale(pairing(a, p), q), scale(pairing(a, q), p)))
                        if w not in fresh:
                            fresh.append(w)
                rays = pos + zer + [w for w in fresh if w not in pos and w not in zer]
            # with no negative rays everything survives unchanged
        processed.append(a)

    lin_basis = saturated_span(lineality)
    return lin_basis, tuple(sorted(set(rays)))


class Cone:
    """A rational polyhedral cone in a fixed lattice, in canonical form.

    Construct with :meth:`from_rays`; the raw constructor trusts its
    arguments to already be canonical.
    """

    __slots__ = ("ambient_rank", "rays", "lineality", "_dual")

    def __init__(self, ambient_rank: int, rays=(), lineality=()):
        self.ambient_rank = int(ambient_rank)
        self.rays: tuple[Vec, ...] = tuple(tuple(r) for r in rays)
        self.lineality: tuple[Vec, ...] = tuple(tuple(l) for l in lineality)
        self._dual: Cone | None = None

    @classmethod
    def from_rays(cls, generators, ambient_rank: int | None = None) -> "Cone":
        """Canonicalize a generator list into a cone.

        Zero generators are dropped; non-extremal generators are
        discarded; opposite generators are absorbed into the lineality
        part.  An empty list gives the zero cone.
        """
        gens = [vector(g) for g in generators]
        if ambient_rank is None:
            if not gens:
                raise DimensionError("ambient rank required for an empty generator list")
            ambient_rank = len(gens[0])
        for g in gens:
            if len(g) != ambient_rank:
                raise DimensionError("generators have mixed ranks")
        gens = sorted({primitive(g) for g in gens if any(g)})
        lin_d, rays_d = _dd(ambient_rank, gens, ())
        lin_c, rays_c = _dd(ambient_rank, rays_d, lin_d)
        cone = cls(ambient_rank, rays_c, lin_c)
        cone._dual = cls(ambient_rank, rays_d, lin_d)
        for g in gens:
            if not cone.contains(g):
                raise IntegrityError("generator/normal cross-validation failed")
        return cone

    @classmethod
    def zero(cls, ambient_rank: int) -> "Cone":
        return cls(ambient_rank)

    # -- canonical data ------------------------------------------------

    def key(self):
        return (self.ambient_rank, self.rays, self.lineality)

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        parts = [f"rank={self.ambient_rank}", f"rays={list(self.rays)}"]
        if self.lineality:
            parts.append(f"lineality={list(self.lineality)}")
        return f"Cone({', '.join(parts)})"

    # -- dual description ----------------------------------------------

    def dual(self) -> "Cone":
        """The cone of functionals that are nonnegative on this cone."""
        if self._dual is None:
            lin, rays = _dd(self.ambient_rank, self.rays, self.lineality)
            self._dual = Cone(self.ambient_rank, rays, lin)
        return self._dual

    @property
    def facet_normals(self) -> tuple[Vec, ...]:
        return self.dual().rays

    @property
    def span_equations(self) -> tuple[Vec, ...]:
        return self.dual().lineality

    def contains(self, point) -> bool:
        v = vector(point)
        if len(v) != self.ambient_rank:
            raise DimensionError("point rank does not match the cone")
        return all(pairing(a, v) >= 0 for a in self.facet_normals) and all(
            pairing(b, v) == 0 for b in self.span_equations
        )

    # -- predicates ------------------------------------------------------

    def dim(self) -> int:
        return matrix_rank(self.lineality + self.rays)

    def is_strongly_convex(self) -> bool:
        return not self.lineality

    def is_simplex(self) -> bool:
        """Whether the cone is spanned by linearly independent rays.

        A cone with lineality is never a simplex: its canonical
        extremal-ray list describes only the pointed quotient.
        """
        return not self.lineality and matrix_rank(self.rays) == len(self.rays)

    def is_smooth(self) -> bool:
        """Whether the rays extend to a basis of the ambient lattice."""
        if not self.is_strongly_convex():
            raise PreconditionError("smoothness is defined for strongly convex cones")
        if not self.rays:
            return True
        snf = smith_normal_form(self.rays)
        return snf.rank == len(self.rays) and all(d == 1 for d in snf.diagonal[: snf.rank])

    # -- faces -----------------------------------------------------------

    def faces(self) -> list["Cone"]:
        """All faces of the cone, itself included."""
        normals = self.facet_normals
        rays = self.rays
        everything = frozenset(range(len(rays)))
        seen = {everything}
        frontier = [everything]
        while frontier:
            current = frontier.pop()
            for a in normals:
                cut = frozenset(i for i in current if pairing(a, rays[i]) == 0)
                if cut not in seen:
                    seen.add(cut)
                    frontier.append(cut)
        out = []
        for subset in seen:
            face = Cone(self.ambient_rank, tuple(sorted(rays[i] for i in subset)), self.lineality)
            out.append(face)
        out.sort(key=lambda c: (c.dim(), c.rays))
        return out

    def is_face_of(self, other: "Cone") -> bool:
        """Whether this cone is cut out of ``other`` by a supporting normal."""
        if self.ambient_rank != other.ambient_rank:
            raise DimensionError("cones live in different lattices")
        if self.lineality != other.lineality:
            return False
        if not set(self.rays) <= set(other.rays):
            return False
        tight = [a for a in other.facet_normals
                 if all(pairing(a, r) == 0 for r in self.rays)]
        carved = tuple(sorted(
            r for r in other.rays if all(pairing(a, r) == 0 for a in tight)
        ))
        return carved == self.rays

    def intersect(self, other: "Cone") -> "Cone":
        if self.ambient_rank != other.ambient_rank:
            raise DimensionError("cones live in different lattices")
        normals = sorted(set(self.facet_normals) | set(other.facet_normals))
        equations = tuple(self.span_equations) + tuple(other.span_equations)
        lin, rays = _dd(self.ambient_rank, normals, equations)
        return Cone(self.ambient_rank, rays, lin)


def orthogonal_face(ray, dual_cone: Cone) -> Cone:
    """The face of ``dual_cone`` orthogonal to a supporting ray direction."""
    rho = vector(ray)
    if len(rho) != dual_cone.ambient_rank:
        raise DimensionError("ray rank does not match the cone")
    if any(pairing(r, rho) < 0 for r in dual_cone.rays) or any(
        pairing(l, rho) != 0 for l in dual_cone.lineality
    ):
        raise PreconditionError("the given ray does not support the cone")
    kept = tuple(sorted(r for r in dual_cone.rays if pairing(r, rho) == 0))
    return Cone(dual_cone.ambient_rank, kept, dual_cone.lineality)
