"""Top-level singular-locus procedures over ramified valuation rings.

Given a presentation R = V[x_1..x_n]/(f_1..f_t) with V an Eisenstein
extension of Z_(p), the singular locus of R along the special fiber V(p) is
the vanishing set, inside Spec F_p[x]/(images of the f_j), of the ideal of
h x h minors of the mixed Jacobian matrix, where h is the height of the
ideal.  The ideal is assumed to be of pure height: the artifact cannot
verify purity and treats it as a stated precondition of the criterion.

The height is taken from the presentation when declared; otherwise it is
computed over the fraction field K (localizing away from the uniformizer
preserves the heights of the components that survive), and if nothing
survives the computation aborts with guidance rather than guessing.

``hj_singular_locus`` is the unramified analogue (p-derivation route) over
Z_(p)[x], used both on its own and as a cross-validation of the ramified
route: ``cross_validate`` rewrites V itself as Z_(p)[y]/(E) and checks that
both pipelines cut out the same locus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arith import LocalRationals, PrimeField, Rationals
from .calculus import fiber_ring, reduce_mod_p, reduce_mod_pi
from .dvr import EisensteinDVR
from .errors import PreconditionError
from .groebner import (
    GroebnerBasis,
    Ideal,
    ideal_dimension,
    ideal_height,
    radical_equal,
)
from .jacobian import PolyMatrix, minors_ideal, mixed_pi_jacobian, hj_mixed_jacobian
from .poly import GREVLEX, MonomialOrder, Polynomial, PolynomialRing


class RingPresentation:
    """A finitely generated V-algebra R = V[x_1..x_n]/(f_1..f_t).

    Generators may be given as polynomials over V or as expression strings.
    ``declared_height`` pins the height h of the ideal; when absent it is
    computed over the fraction field on demand.  Instances are immutable by
    convention and cache the derived data they hand out.
    """

    def __init__(self, dvr: EisensteinDVR, variables, generators, height=None):
        self.dvr = dvr
        self.ring = PolynomialRing(dvr, tuple(variables))
        polys = []
        for g in generators:
            if isinstance(g, str):
                g = self.ring.parse(g)
            elif g.ring != self.ring:
                raise ValueError(f"generator ring mismatch: {g.ring!r} vs {self.ring!r}")
            polys.append(g)
        self.generators = tuple(polys)
        if height is not None:
            if not 0 <= height <= self.nvars + 1:
                raise PreconditionError(
                    f"declared height {height} outside 0..{self.nvars + 1}"
                )
        self.declared_height = height

    @property
    def nvars(self) -> int:
        return len(self.ring.variables)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.ring.variables

    @cached_property
    def fiber_ring(self) -> PolynomialRing:
        return fiber_ring(self.ring)

    @cached_property
    def fiber_generators(self) -> tuple[Polynomial, ...]:
        """Images of the generators in F_p[x], i.e. modulo the uniformizer."""
        return tuple(reduce_mod_pi(f) for f in self.generators)

    @cached_property
    def mixed_jacobian(self) -> PolyMatrix:
        return mixed_pi_jacobian(self.ring, self.generators)

    def height(self) -> tuple[int, str]:
        """(h, source): the declared height if any, else the computed default."""
        if self.declared_height is not None:
            return self.declared_height, "declared"
        return default_height(self), "computed over Frac(V)"

    @cached_property
    def _minor_generators(self) -> tuple[Polynomial, ...]:
        h, _ = self.height()
        return tuple(minors_ideal(self.mixed_jacobian, h).generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"RingPresentation({self.dvr}; [{', '.join(self.variables)}]; ({gens}))"


@dataclass(frozen=True)
class LocusReport:
    """The singular locus along V(p), as a reduced basis in F_p[x].

    ``basis`` generates the ideal (images of the generators) + (h x h
    minors); the locus is its vanishing set, so any ideal with the same
    radical describes the same locus.
    """

    basis: GroebnerBasis
    used_height: int
    is_empty: bool
    height_source: str

    def ideal(self) -> Ideal:
        return Ideal(self.basis.ring, self.basis.polys)

    def __str__(self):
        return str(self.basis)


def default_height(pres: RingPresentation) -> int:
    """Height of the ideal, computed over the fraction field K = Frac(V).

    Valid whenever no minimal prime of the ideal contains the uniformizer,
    since inverting it preserves the heights of the remaining components.
    If the extended ideal is everything, there is no such component and the
    caller must declare the height instead.
    """
    field = pres.dvr.fraction_field()
    ring_k = PolynomialRing(field, pres.variables)
    gens = [
        f.map_coefficients(lambda c: field.element([x.value for x in c.coeffs]), ring_k)
        for f in pres.generators
    ]
    ideal = Ideal(ring_k, gens)
    if ideal.groebner().is_unit_ideal:
        raise PreconditionError(
            "all components of the ideal contain pi; supply the height explicitly"
        )
    return pres.nvars - ideal_dimension(ideal)


def singular_locus_at_p(
    pres: RingPresentation, order: MonomialOrder | None = None
) -> LocusReport:
    """Sing R intersected with V(p), inside Spec of F_p[x]/(generator images).

    Returns the reduced basis of (images) + (h x h minors of the mixed
    matrix); the locus is empty exactly when that ideal is the unit ideal.
    """
    h, source = pres.height()
    gens = list(pres.fiber_generators) + list(pres._minor_generators)
    basis = Ideal(pres.fiber_ring, gens).groebner(order or GREVLEX)
    return LocusReport(basis, h, basis.is_unit_ideal, source)


def _prime_basis(pres: RingPresentation, prime_gens) -> GroebnerBasis:
    ring = pres.fiber_ring
    polys = []
    for g in prime_gens:
        if isinstance(g, str):
            g = ring.parse(g)
        elif g.ring != ring:
            raise ValueError(f"prime generator ring mismatch: {g.ring!r} vs {ring!r}")
        polys.append(g)
    gb = Ideal(ring, polys).groebner()
    for image in pres.fiber_generators:
        if not gb.contains(image):
            raise PreconditionError(
                f"the ideal ({', '.join(map(str, polys))}) does not contain the "
                f"generator image {image}; not a prime of R/(pi)R"
            )
    if gb.is_unit_ideal:
        raise PreconditionError("the unit ideal is not a prime of R/(pi)R")
    return gb


def is_regular_at(pres: RingPresentation, prime_gens) -> bool:
    """Whether R is regular at a prime of the special fiber.

    The prime is given by generators of its image in F_p[x] (primality is
    trusted; containment of the generator images is verified).  Regularity
    holds iff some h x h minor of the mixed matrix avoids the prime.
    """
    gb = _prime_basis(pres, prime_gens)
    return any(not gb.contains(m) for m in pres._minor_generators)


@dataclass(frozen=True)
class OmegaFreeness:
    """Freeness data of the differential module at a prime of the fiber."""

    free: bool
    rank: int
    dim_r: int
    fiber_pdegree: int

    @property
    def b(self) -> int:
        return self.fiber_pdegree


def omega_free_rank_check(pres: RingPresentation, prime_gens) -> OmegaFreeness:
    """Rank bookkeeping for the mod-pi differential module at a prime.

    With b the p-degree of the prime's residue field and h the height of the
    presented ideal, the module is free at the prime of rank
    dim R_p + b = n + 1 - h exactly when R is regular there.
    """
    gb = _prime_basis(pres, prime_gens)
    h, _ = pres.height()
    prime_height = ideal_height(Ideal(pres.fiber_ring, gb.polys))
    b = pres.nvars - prime_height
    dim_r = (prime_height + 1) - h
    rank = dim_r + b
    free = any(not gb.contains(m) for m in pres._minor_generators)
    return OmegaFreeness(free, rank, dim_r, b)


def kunz_pdegree(ideal: Ideal) -> int:
    """log_p of the p-degree [k(q) : k(q)^p] of the residue field of a prime
    of F_p[x_1..x_n]; equals n - height(q) since F_p is perfect."""
    if not isinstance(ideal.ring.scalars, PrimeField):
        raise PreconditionError(
            f"the p-degree formula applies over F_p, got {ideal.ring.scalars}"
        )
    return ideal.ring.nvars - ideal_height(ideal)


def hj_singular_locus(
    generators,
    height: int | None = None,
    ring: PolynomialRing | None = None,
    order: MonomialOrder | None = None,
) -> LocusReport:
    """Singular locus along V(p) for a presentation over Z_(p), via the
    p-derivation mixed matrix.

    When the height is not supplied it is computed over Q, with the same
    caveat as the ramified route: every component must survive inverting p.
    """
    generators = list(generators)
    if ring is None:
        if not generators:
            raise ValueError("a ring is required for an empty generator list")
        ring = generators[0].ring
    if not isinstance(ring.scalars, LocalRationals):
        raise PreconditionError(
            f"the p-derivation route needs Z_(p) coefficients, got {ring.scalars}"
        )
    if height is None:
        ring_q = PolynomialRing(Rationals(), ring.variables)
        gens_q = [f.map_coefficients(lambda c: c.value, ring_q) for f in generators]
        ideal_q = Ideal(ring_q, gens_q)
        if ideal_q.groebner().is_unit_ideal:
            raise PreconditionError(
                "all components of the ideal contain p; supply the height explicitly"
            )
        height = ring.nvars - ideal_dimension(ideal_q)
        source = "computed over QQ"
    else:
        source = "declared"
    matrix = hj_mixed_jacobian(ring, generators)
    fiber_gens = [reduce_mod_p(f) for f in generators]
    gens = fiber_gens + list(minors_ideal(matrix, height).generators)
    basis = Ideal(matrix.ring, gens).groebner(order or GREVLEX)
    return LocusReport(basis, height, basis.is_unit_ideal, source)


def _fresh_lift_variable(names) -> str:
    for candidate in ("y", "t", "w", "s"):
        if candidate not in names:
            return candidate
    k = 0
    while f"y{k}" in names:
        k += 1
    return f"y{k}"


def unramified_presentation(pres: RingPresentation):
    """Rewrite R over Z_(p): adjoin a variable for the uniformizer and add
    the Eisenstein polynomial as a generator.

    Returns (ring over Z_(p), [E(y), f_1*, ..., f_t*], lift variable name)
    where f* substitutes the new variable for pi.
    """
    p = pres.dvr.p
    fresh = _fresh_lift_variable(pres.variables)
    ring_u = PolynomialRing(LocalRationals(p), (fresh,) + pres.variables)
    n = pres.nvars
    e = pres.dvr.e

    eis_terms = {(e,) + (0,) * n: ring_u.scalars.one}
    for i, a in enumerate(pres.dvr.coeffs):
        if a:
            eis_terms[(i,) + (0,) * n] = a
    gens = [Polynomial(ring_u, eis_terms)]

    for f in pres.generators:
        terms: dict = {}
        for mono, coeff in f.terms.items():
            for k, c in enumerate(coeff.coeffs):
                if c:
                    terms[(k,) + mono] = c
        gens.append(Polynomial(ring_u, terms))
    return ring_u, gens, fresh


def cross_validate(pres: RingPresentation) -> bool:
    """Agreement of the ramified and unramified routes on one presentation.

    The unramified side computes the locus of Z_(p)[y, x]/(E(y), f*) with
    height h+1 (one extra generator cutting the regular hypersurface V, one
    extra variable); both loci are compared as subsets of the special fiber,
    where the uniformizer is nilpotent, so radical equality is tested after
    adding its ideal to both sides.
    """
    h, _ = pres.height()
    ring_u, gens_u, fresh = unramified_presentation(pres)
    hj_report = hj_singular_locus(gens_u, height=h + 1, ring=ring_u)
    pi_report = singular_locus_at_p(pres)

    fiber_u = fiber_ring(ring_u)
    fiber_images = [reduce_mod_p(g) for g in gens_u]
    fresh_gen = fiber_u.gen(0)

    lifted = [
        Polynomial(fiber_u, {(0,) + m: c for m, c in g.terms.items()})
        for g in pi_report.basis.polys
    ]
    side_hj = Ideal(
        fiber_u, tuple(hj_report.basis.polys) + (fresh_gen,) + tuple(fiber_images)
    )
    side_pi = Ideal(fiber_u, tuple(lifted) + (fresh_gen,) + tuple(fiber_images))
    return radical_equal(side_hj, side_pi)
