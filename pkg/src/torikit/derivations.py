"""Homogeneous locally nilpotent derivations of toric coordinate rings.

For an extremal ray ``rho`` of the cone describing the affine hull and a
degree ``e`` in the corresponding root set, the derivation sends the
monomial with exponent ``m`` to ``<m, rho>`` times the monomial with
exponent ``e + m``.  Exponentiating such a derivation gives a
one-parameter additive group action; this module also assembles, for a
quasi-affine fan, a full-rank family of such actions that fix the
boundary divisors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cone import orthogonal_face
from .errors import IntegrityError, NilpotencyCapError, PreconditionError
from .fan import Fan
from .lattice import Vec, add, determinant, matrix_rank, pairing, vector
from .semigroup import (
    AffineSemigroup,
    AlgebraElement,
    boundary_projection,
    hilbert_basis,
)

NILPOTENCY_CAP = 10_000


def is_root(semigroup: AffineSemigroup, ray, degree) -> bool:
    """Whether ``degree`` is an admissible derivation degree along ``ray``.

    The degree must lie outside the semigroup while degree + m stays
    inside for every generator m off the wall orthogonal to the ray.
    Checking generators suffices: any element off the wall decomposes
    into generators at least one of which is off the wall, and adding
    semigroup elements preserves membership.
    """
    rho = _extremal_ray(semigroup, ray)
    e = vector(degree)
    if semigroup.contains(e):
        return False
    for m in semigroup.generators:
        if pairing(m, rho) > 0 and not semigroup.contains(add(e, m)):
            return False
    return True


def enumerate_roots(semigroup: AffineSemigroup, ray, radius: int) -> list[Vec]:
    """All admissible degrees in the box [-radius, radius]^rank, sorted.

    The full root set is infinite (it is stable under adding wall
    elements); the box is a finite window.  An empty result only means
    the window is too small, and a warning says so.
    """
    if radius < 1:
        raise PreconditionError("radius must be at least 1")
    rho = _extremal_ray(semigroup, ray)
    hits = [
        e
        for e in product(range(-radius, radius + 1), repeat=semigroup.rank)
        if is_root(semigroup, rho, e)
    ]
    if not hits:
        warnings.warn(
            "no derivation degrees found in the search box; increase the radius",
            RuntimeWarning,
            stacklevel=2,
        )
    return sorted(hits)


def _extremal_ray(semigroup: AffineSemigroup, ray) -> Vec:
    rho = vector(ray)
    sigma = semigroup.cone.dual()
    if rho not in sigma.rays:
        raise PreconditionError(
            f"{rho} is not an extremal ray of the cone dual to the semigroup"
        )
    return rho


@dataclass(frozen=True)
class HomogeneousDerivation:
    """A homogeneous locally nilpotent derivation of a toric coordinate ring.

    ``ray`` is a primitive extremal ray of the cone dual to the ambient
    semigroup's cone and ``degree`` an admissible degree along it; both
    are validated on construction.  The pairing of the degree with the
    ray is recorded but no specific value is assumed.
    """

    ray: Vec
    degree: Vec
    ambient: AffineSemigroup = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ray", vector(self.ray))
        object.__setattr__(self, "degree", vector(self.degree))
        if not is_root(self.ambient, self.ray, self.degree):
            raise PreconditionError(
                f"{self.degree} is not an admissible degree along {self.ray}"
            )

    @property
    def ray_pairing(self) -> int:
        return pairing(self.degree, self.ray)

    def __call__(self, element: AlgebraElement) -> AlgebraElement:
        """Apply the derivation termwise.

        Each monomial exponent m contributes <m, ray> times the monomial
        at m + degree; exponents on the wall are killed.  Surviving
        exponents must land back in the semigroup, which is guaranteed
        for regular inputs and enforced here.
        """
        out = {}
        for m, c in element.terms():
            w = pairing(m, self.ray)
            if w == 0:
                continue
            shifted = add(self.degree, m)
            if not self.ambient.contains(shifted):
                raise IntegrityError(
                    f"derivation left the coordinate ring at exponent {m}"
                )
            out[shifted] = out.get(shifted, Fraction(0)) + c * w
        return AlgebraElement(out)

    apply = __call__

    def nilpotency_order(self, exponent, cap: int = NILPOTENCY_CAP) -> int:
        """Smallest k with the k-th derivative of the monomial equal to zero."""
        if cap < 1:
            raise PreconditionError("cap must be at least 1")
        m = vector(exponent)
        if not self.ambient.contains(m):
            raise PreconditionError(f"{m} is not in the ambient semigroup")
        current = AlgebraElement.monomial(m)
        for k in range(1, cap + 1):
            current = self(current)
            if current.is_zero():
                return k
        raise NilpotencyCapError(
            f"monomial {m} not annihilated within {cap} applications"
        )

    def exponentiate(self, time, element: AlgebraElement) -> AlgebraElement:
        """Image of an element under the time-``time`` flow of the derivation.

        The exponential series is finite by local nilpotency; at each
        time it is a ring automorphism, and time 0 is the identity.
        """
        s = Fraction(time)
        result = element
        term = element
        factorial = 1
        k = 0
        while True:
            term = self(term)
            if term.is_zero():
                return result
            k += 1
            factorial *= k
            result = result + (s**k / factorial) * term
            if k > NILPOTENCY_CAP:
                raise NilpotencyCapError("exponential series did not terminate")


@dataclass(frozen=True)
class GaActionFamily:
    """A full-rank family of boundary-fixing additive group actions.

    All derivations share one chosen ray; their degrees are the
    characters through which the torus acts on the one-parameter
    subgroups, and they are linearly independent.
    """

    derivations: tuple[HomogeneousDerivation, ...]
    characters: tuple[Vec, ...]
    chosen_ray: Vec
    boundary_rays: tuple[Vec, ...]
    root_degree: Vec
    wall_generators: tuple[Vec, ...]
    semigroup: AffineSemigroup
    character_determinant: int


def build_ga_actions(fan: Fan, start_radius: int = 3, max_radius: int = 48) -> GaActionFamily:
    """Run the boundary-fixing construction on a quasi-affine fan.

    Steps: certify every fan cone is a face of the support cone; take
    the lexicographically first ray as the distinguished one and the
    remaining extremal rays as the boundary; find the first admissible
    degree by box search; build the wall semigroup orthogonal to the
    chosen ray; shift the degree by wall elements that are positive on
    every boundary ray to get one derivation per ambient dimension with
    independent characters.  The boundary-annihilation property is
    verified on every generator before returning.
    """
    n = fan.ambient_rank
    if not fan.rays:
        raise PreconditionError("the fan of a torus admits no homogeneous additive actions")
    if matrix_rank(fan.rays) != n:
        raise PreconditionError(
            "rays do not span the ambient space; split off the torus factor first"
        )
    sigma, all_faces = fan.support_cone()
    if not all_faces:
        raise PreconditionError(
            "input fan is not quasi-affine: some cone is not a face of the support cone"
        )
    assert sigma.is_strongly_convex()

    chosen = next((r for r in sigma.rays if r in fan.rays), None)
    if chosen is None:
        raise IntegrityError("support cone has no extremal ray among the fan rays")
    boundary = tuple(r for r in sigma.rays if r != chosen)

    semis = hilbert_basis(sigma.dual())
    assert not semis.units

    degree = None
    radius = start_radius
    while True:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            roots = enumerate_roots(semis, chosen, radius)
        if roots:
            degree = roots[0]
            break
        if radius >= max_radius:
            raise IntegrityError(
                f"no admissible degree within radius {max_radius}; "
                "this contradicts nonemptiness of the root set"
            )
        radius *= 2

    wall = hilbert_basis(orthogonal_face(chosen, sigma.dual()))
    assert not wall.units
    wall_gens = wall.generators
    base = tuple(sum(g[j] for g in wall_gens) for j in range(n)) if wall_gens else (0,) * n
    for rho in boundary:
        if pairing(base, rho) <= 0:
            raise IntegrityError(
                f"wall generator sum is not positive on boundary ray {rho}"
            )

    independent: list[Vec] = []
    for h in wall_gens:
        if matrix_rank(independent + [h]) > len(independent):
            independent.append(h)
        if len(independent) == n - 1:
            break
    if len(independent) != n - 1:
        raise IntegrityError(
            "wall semigroup does not span a hyperplane; cannot happen for a "
            "full-dimensional strongly convex support cone"
        )

    shifts = [add(base, h) for h in independent] + [base]
    characters = tuple(add(degree, s) for s in shifts)
    det = determinant(characters)
    if det == 0:
        raise IntegrityError("character matrix is singular")
    derivations = tuple(
        HomogeneousDerivation(chosen, chi, semis) for chi in characters
    )

    for d in derivations:
        for m in semis.generators:
            image = d(AlgebraElement.monomial(m))
            for rho in boundary:
                if not boundary_projection(rho, semis, image).is_zero():
                    raise IntegrityError(
                        f"derivation of degree {d.degree} does not fix the "
                        f"boundary divisor of ray {rho}"
                    )

    return GaActionFamily(
        derivations=derivations,
        characters=characters,
        chosen_ray=chosen,
        boundary_rays=boundary,
        root_degree=degree,
        wall_generators=wall_gens,
        semigroup=semis,
        character_determinant=det,
    )
