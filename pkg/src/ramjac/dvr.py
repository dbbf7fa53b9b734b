"""Arithmetic in an Eisenstein-presented ramified discrete valuation ring.

The ring is V = Z_(p)[pi]/(E(pi)) for a monic Eisenstein polynomial E of
degree e >= 2.  Elements are coefficient vectors c_0..c_{e-1} in powers of
the uniformizer pi, with p-local rational entries, and all operations are
exact.  The residue field is always F_p.

The degree-one case (an unramified ring) is rejected at construction:
computations over Z_(p) itself go through the p-derivation route in
:mod:`ramjac.calculus` and :mod:`ramjac.criterion` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import FpElement, LocalRational, NumberField, is_prime, residue_mod_p, vp
from .errors import PreconditionError


@dataclass(frozen=True)
class EisensteinDVR:
    """V = Z_(p)[pi]/(E) with E = y^e + coeffs[e-1] y^{e-1} + ... + coeffs[0].

    Doubles as the coefficient-domain descriptor for polynomial rings over V.
    """

    p: int
    coeffs: tuple[LocalRational, ...]
    is_field = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        coeffs = tuple(
            c if isinstance(c, LocalRational) else LocalRational(Fraction(c), self.p)
            for c in self.coeffs
        )
        object.__setattr__(self, "coeffs", coeffs)
        e = len(coeffs)
        if e < 2:
            raise PreconditionError(
                f"ramification index e = {e} is less than 2; unramified rings are "
                "handled by the p-derivation criterion, not by this presentation"
            )
        for i, a in enumerate(coeffs):
            if a and vp(a, self.p) < 1:
                raise PreconditionError(
                    f"not Eisenstein: coefficient a_{i} = {a} is not divisible by p = {self.p}"
                )
        a0 = coeffs[0]
        if not a0:
            raise PreconditionError(
                "not Eisenstein: constant term a_0 = 0 (the polynomial is reducible)"
            )
        if vp(a0, self.p) != 1:
            raise PreconditionError(
                f"not Eisenstein: constant term a_0 = {a0} is divisible by "
                f"p^2 = {self.p ** 2} (its p-adic valuation must be exactly 1)"
            )

    @property
    def e(self) -> int:
        """Ramification index, the degree of the defining polynomial."""
        return len(self.coeffs)

    def element(self, values) -> "DVRElement":
        vals = [
            v if isinstance(v, LocalRational) else LocalRational(Fraction(v), self.p)
            for v in values
        ]
        if len(vals) > self.e:
            raise ValueError("coefficient vector longer than the ramification index")
        zero = LocalRational(Fraction(0), self.p)
        vals += [zero] * (self.e - len(vals))
        return DVRElement(self, tuple(vals))

    @property
    def zero(self) -> "DVRElement":
        return self.element([])

    @property
    def one(self) -> "DVRElement":
        return self.element([1])

    @property
    def uniformizer(self) -> "DVRElement":
        return self.element([0, 1])

    def from_int(self, n: int) -> "DVRElement":
        return self.element([n])

    def from_fraction(self, q: Fraction) -> "DVRElement":
        return self.element([q])

    def fraction_field(self) -> NumberField:
        """The number field K = Q[y]/(E), with y the now-invertible uniformizer."""
        return NumberField(tuple(c.value for c in self.coeffs))

    def defining_poly_str(self) -> str:
        parts = [f"pi^{self.e}"]
        for i in range(self.e - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            sym = "" if i == 0 else ("pi" if i == 1 else f"pi^{i}")
            s = str(a)
            sign = " - " if s.startswith("-") else " + "
            body = s.lstrip("-")
            if sym:
                body = sym if body == "1" else f"{body}*{sym}"
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self):
        return f"Z_({self.p})[pi]/({self.defining_poly_str()})"


@dataclass(frozen=True)
class DVRElement:
    """Sum of c_i * pi^i for i < e, with p-local rational coefficients."""

    dvr: EisensteinDVR
    coeffs: tuple[LocalRational, ...]

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            return self.dvr.from_fraction(Fraction(other))
        if isinstance(other, DVRElement):
            if other.dvr != self.dvr:
                raise ValueError("elements of different valuation rings")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return DVRElement(
            self.dvr, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return DVRElement(
            self.dvr, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return DVRElement(self.dvr, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        e = self.dvr.e
        zero = LocalRational(Fraction(0), self.dvr.p)
        prod = [zero] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        # reduce modulo the monic defining polynomial
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = zero
                for i, m in enumerate(self.dvr.coeffs):
                    prod[k - e + i] = prod[k - e + i] - c * m
        return DVRElement(self.dvr, tuple(prod[:e]))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.dvr.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def valuation(self) -> int:
        """Exact pi-adic valuation.

        v(c_i pi^i) = i + e*vp(c_i), and these candidates are pairwise
        distinct modulo e for distinct i, so the minimum over nonzero
        coefficients is the valuation of the sum.
        """
        if not self:
            raise PreconditionError("valuation of zero undefined")
        e = self.dvr.e
        return min(
            i + e * c.valuation() for i, c in enumerate(self.coeffs) if c
        )

    def is_unit(self) -> bool:
        c0 = self.coeffs[0]
        return bool(c0) and c0.valuation() == 0

    def residue(self) -> FpElement:
        """Image in the residue field F_p = V/(pi)."""
        return residue_mod_p(self.coeffs[0])

    def pi2_expansion(self) -> tuple[FpElement, FpElement]:
        """The pair (c_0 mod p, c_1 mod p), i.e. the element modulo pi^2.

        Because e >= 2 puts p inside (pi^2), this depends only on the class
        of the element modulo pi^2; the residue classes are lifted by their
        integer representatives.
        """
        return (residue_mod_p(self.coeffs[0]), residue_mod_p(self.coeffs[1]))

    def __str__(self):
        from .poly import join_signed_terms

        pieces = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sym = "" if i == 0 else ("pi" if i == 1 else f"pi^{i}")
            pieces.append((str(c), sym))
        return join_signed_terms(pieces)
