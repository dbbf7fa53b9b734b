"""The differential operators that drive the mixed Jacobian matrices.

Two derivative-like maps live here, together with the reduction maps they
interact with:

* ``d_dpi`` sends V[x] to F_p[x] over a ramified DVR V.  It reads off, for
  each coefficient, the pi-linear part of the expansion modulo pi^2, with
  the sign fixed so that d_dpi(pi) = +1.  It is additive, kills p and pi^2,
  and satisfies the module Leibniz rule d(fg) = f~ d(g) + g~ d(f) where ~
  is reduction mod pi.

* ``delta_p`` is the p-derivation on Z_(p)[x]: the exact quotient
  (f(x_1^p, ..., x_n^p) - f^p) / p.  The numerator is divisible by p
  because the two terms agree modulo p by Fermat; the implementation checks
  this coefficient by coefficient and treats a failure as an internal bug.
"""

from __future__ import annotations

from .arith import LocalRational, LocalRationals, PrimeField, residue_mod_p
from .dvr import EisensteinDVR
from .errors import PreconditionError
from .poly import Polynomial, PolynomialRing


def _require_dvr(f: Polynomial) -> EisensteinDVR:
    scalars = f.ring.scalars
    if not isinstance(scalars, EisensteinDVR):
        if isinstance(scalars, LocalRationals):
            raise PreconditionError(
                "coefficients lie in an unramified ring; use the p-derivation "
                "(delta_p) route instead of d_dpi"
            )
        raise PreconditionError(f"d_dpi needs DVR coefficients, got {scalars}")
    return scalars


def fiber_ring(ring: PolynomialRing) -> PolynomialRing:
    """F_p[x_1..x_n] with the same variable names as a ring over V or Z_(p)."""
    return PolynomialRing(PrimeField(ring.scalars.p), ring.variables)


def reduce_mod_pi(f: Polynomial) -> Polynomial:
    """Coefficientwise residue map V[x] -> F_p[x]."""
    _require_dvr(f)
    return f.map_coefficients(lambda c: c.residue(), fiber_ring(f.ring))


def reduce_mod_p(f: Polynomial) -> Polynomial:
    """Coefficientwise residue map Z_(p)[x] -> F_p[x]."""
    scalars = f.ring.scalars
    if not isinstance(scalars, LocalRationals):
        raise PreconditionError(f"reduce_mod_p needs Z_(p) coefficients, got {scalars}")
    return f.map_coefficients(lambda c: c.residue(), fiber_ring(f.ring))


def d_dpi(f: Polynomial) -> Polynomial:
    """The derivation V[x] -> F_p[x] with d_dpi(pi) = 1.

    Each coefficient contributes the pi-part of its mod-pi^2 expansion on
    the same monomial, so the result depends only on f modulo pi^2.
    """
    _require_dvr(f)
    return f.map_coefficients(lambda c: c.pi2_expansion()[1], fiber_ring(f.ring))


def delta_p(f: Polynomial) -> Polynomial:
    """The p-derivation (frobenius_pullback(f) - f^p) / p on Z_(p)[x]."""
    scalars = f.ring.scalars
    if not isinstance(scalars, LocalRationals):
        raise PreconditionError(f"delta_p needs Z_(p) coefficients, got {scalars}")
    p = scalars.p
    numerator = f.frobenius_pullback() - f ** p

    def divide(c: LocalRational) -> LocalRational:
        if c.valuation() < 1:
            raise ArithmeticError(
                f"p-derivation numerator coefficient {c} not divisible by {p}; "
                "this is an arithmetic bug"
            )
        return LocalRational(c.value / p, p)

    return numerator.map_coefficients(divide, f.ring)


def partials_mod_pi(f: Polynomial) -> list[Polynomial]:
    """All partial derivatives of f, reduced modulo pi."""
    return [reduce_mod_pi(f.partial_derivative(i)) for i in range(f.ring.nvars)]
