"""Shared random generators for the property-based tests.

All randomness is seeded per test, so the suite is deterministic; the
generators keep degrees and coefficient sizes small enough that the exact
arithmetic stays fast even for p-th power computations.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ramjac import (
    EisensteinDVR,
    LocalRational,
    LocalRationals,
    Polynomial,
    PolynomialRing,
    PrimeField,
)


def rand_fraction(rng: random.Random, p: int, span: int = 9) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.choice([d for d in (1, 2, 3, 5, 7) if d % p != 0])
    return Fraction(num, den)


def rand_local(rng: random.Random, p: int) -> LocalRational:
    return LocalRational(rand_fraction(rng, p), p)


def rand_dvr_element(rng: random.Random, dvr: EisensteinDVR):
    return dvr.element([rand_fraction(rng, dvr.p) for _ in range(dvr.e)])


def rand_monomial(rng: random.Random, nvars: int, maxdeg: int = 3):
    return tuple(rng.randint(0, maxdeg) for _ in range(nvars))


def rand_poly(
    rng: random.Random,
    ring: PolynomialRing,
    coeff_factory,
    nterms: int = 4,
    maxdeg: int = 3,
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        m = rand_monomial(rng, ring.nvars, maxdeg)
        c = coeff_factory(rng)
        if c:
            terms[m] = c
    return ring.from_terms(terms)


def rand_fp_poly(rng: random.Random, ring: PolynomialRing, **kw) -> Polynomial:
    p = ring.scalars.p
    return rand_poly(rng, ring, lambda r: ring.scalars.from_int(r.randint(0, p - 1)), **kw)


def rand_zp_poly(rng: random.Random, ring: PolynomialRing, **kw) -> Polynomial:
    p = ring.scalars.p
    return rand_poly(rng, ring, lambda r: rand_local(r, p), **kw)


def rand_dvr_poly(rng: random.Random, ring: PolynomialRing, **kw) -> Polynomial:
    dvr = ring.scalars
    return rand_poly(rng, ring, lambda r: rand_dvr_element(r, dvr), **kw)


def eisenstein_dvr(p: int, e: int) -> EisensteinDVR:
    coeffs = [0] * e
    coeffs[0] = -p
    return EisensteinDVR(p, tuple(coeffs))


def fp_ring(p: int, *names: str) -> PolynomialRing:
    return PolynomialRing(PrimeField(p), names)


def zp_ring(p: int, *names: str) -> PolynomialRing:
    return PolynomialRing(LocalRationals(p), names)


def dvr_ring(p: int, e: int, *names: str) -> PolynomialRing:
    return PolynomialRing(eisenstein_dvr(p, e), names)
