"""Exact arithmetic in the base coefficient domains.

Three scalar domains underpin everything else: the prime field F_p, the
localization Z_(p) of the rationals at a prime p, and the number field
Q[y]/(E) obtained from the defining polynomial of an Eisenstein extension.
Everything is exact; there is no floating point anywhere in this package,
because the criteria downstream are exact ideal-membership statements.

Domain descriptor objects (PrimeField, Rationals, LocalRationals,
NumberField) all expose ``zero``, ``one``, ``from_int``, ``from_fraction``
and an ``is_field`` flag; polynomial rings are generic over them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(q, p: int) -> int:
    """Exact p-adic valuation of a nonzero integer, Fraction or LocalRational."""
    if isinstance(q, LocalRational):
        q = q.value
    q = Fraction(q)
    if q == 0:
        raise PreconditionError("valuation of zero undefined")

    def count(n: int) -> int:
        n = abs(n)
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k

    return count(q.numerator) - count(q.denominator)


@dataclass(frozen=True)
class FpElement:
    """An element of the prime field F_p, stored as a residue in [0, p)."""

    residue: int
    prime: int

    def __post_init__(self):
        if self.prime < 2:
            raise ValueError(f"modulus must be at least 2, got {self.prime}")
        object.__setattr__(self, "residue", self.residue % self.prime)

    def _match(self, other) -> "FpElement":
        if isinstance(other, int):
            return FpElement(other, self.prime)
        if isinstance(other, FpElement):
            if other.prime != self.prime:
                raise ValueError(f"mixed moduli {self.prime} and {other.prime}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.residue + other.residue, self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.residue - other.residue, self.prime)

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.residue * other.residue, self.prime)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.residue, self.prime)

    def __truediv__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        if other.residue == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.prime}")
        return FpElement(self.residue * pow(other.residue, -1, self.prime), self.prime)

    def inverse(self) -> "FpElement":
        if self.residue == 0:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.prime}")
        return FpElement(pow(self.residue, -1, self.prime), self.prime)

    def __pow__(self, k: int):
        return FpElement(pow(self.residue, k, self.prime), self.prime)

    def __bool__(self):
        return self.residue != 0

    def __str__(self):
        return str(self.residue)


@dataclass(frozen=True)
class LocalRational:
    """A rational number lying in Z_(p): the denominator is coprime to p.

    Kept in lowest terms with a positive denominator (Fraction guarantees
    both), so equality is plain structural equality.
    """

    value: Fraction
    prime: int

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value.denominator % self.prime == 0:
            raise PreconditionError(
                f"{self.value} is not p-local at p = {self.prime}: "
                f"denominator divisible by {self.prime}"
            )

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalRational(Fraction(other), self.prime)
        if isinstance(other, LocalRational):
            if other.prime != self.prime:
                raise ValueError(f"mixed primes {self.prime} and {other.prime}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalRational(self.value + other.value, self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalRational(self.value - other.value, self.prime)

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return LocalRational(self.value * other.value, self.prime)

    __rmul__ = __mul__

    def __neg__(self):
        return LocalRational(-self.value, self.prime)

    def __truediv__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("division by zero")
        return LocalRational(self.value / other.value, self.prime)

    def __pow__(self, k: int):
        return LocalRational(self.value**k, self.prime)

    def __bool__(self):
        return self.value != 0

    def valuation(self) -> int:
        return vp(self.value, self.prime)

    def residue(self) -> FpElement:
        return residue_mod_p(self)

    def __str__(self):
        return str(self.value)


def residue_mod_p(q, p: int | None = None) -> FpElement:
    """Reduce an element of Z_(p) to the prime field F_p."""
    if isinstance(q, LocalRational):
        p = q.prime
        q = q.value
    if p is None:
        raise ValueError("a prime is required to reduce a bare number")
    q = Fraction(q)
    if q.denominator % p == 0:
        raise PreconditionError(f"{q} has no residue mod {p}")
    return FpElement(q.numerator * pow(q.denominator, -1, p), p)


@dataclass(frozen=True)
class PrimeField:
    """Descriptor for the coefficient field F_p."""

    p: int
    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self.p)

    def from_fraction(self, q: Fraction) -> FpElement:
        return residue_mod_p(q, self.p)

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Rationals:
    """Descriptor for the field Q; elements are stdlib Fractions."""

    is_field = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, q: Fraction) -> Fraction:
        return Fraction(q)

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class LocalRationals:
    """Descriptor for the ring Z_(p); elements are LocalRational values."""

    p: int
    is_field = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def zero(self) -> LocalRational:
        return LocalRational(Fraction(0), self.p)

    @property
    def one(self) -> LocalRational:
        return LocalRational(Fraction(1), self.p)

    def from_int(self, n: int) -> LocalRational:
        return LocalRational(Fraction(n), self.p)

    def from_fraction(self, q: Fraction) -> LocalRational:
        return LocalRational(Fraction(q), self.p)

    def __str__(self):
        return f"Z_({self.p})"


# -- dense univariate helpers over Q, used for number-field inversion --------


def _qpoly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[d + i] -= c * bc
        _qpoly_trim(a)
        if not a:
            break
    return _qpoly_trim(q), a


def _qpoly_invert_mod(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Invert a modulo a monic polynomial via the extended Euclidean algorithm."""
    r0, r1 = list(modulus), _qpoly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r2 = _qpoly_divmod(r0, r1)
        # s2 = s0 - q * s1
        s2 = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qc in enumerate(q):
            for j, sc in enumerate(s1):
                s2[i + j] -= qc * sc
        r0, r1 = r1, r2
        s0, s1 = s1, _qpoly_trim(s2)
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor modulo the given polynomial")
    g = r0[0]
    inv = [c / g for c in s0]
    _, rem = _qpoly_divmod(inv, modulus)
    return rem


@dataclass(frozen=True)
class NumberField:
    """The field Q[y]/(E) for a monic E, given by its non-leading coefficients.

    ``modulus`` lists a_0 .. a_{e-1} ascending, so E = y^e + a_{e-1} y^{e-1}
    + ... + a_0.  When built from an Eisenstein extension this is the
    fraction field of the valuation ring, and the class y of the generator
    is the (now invertible) uniformizer; it prints as ``pi``.
    """

    modulus: tuple[Fraction, ...]
    is_field = True

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(Fraction(c) for c in self.modulus))
        if len(self.modulus) < 1:
            raise ValueError("the defining polynomial must have degree at least 1")

    @property
    def degree(self) -> int:
        return len(self.modulus)

    def element(self, coeffs) -> "NumberFieldElement":
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return NumberFieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> "NumberFieldElement":
        return self.element([])

    @property
    def one(self) -> "NumberFieldElement":
        return self.element([1])

    @property
    def generator(self) -> "NumberFieldElement":
        if self.degree == 1:
            return self.element([-self.modulus[0]])
        return self.element([0, 1])

    def from_int(self, n: int) -> "NumberFieldElement":
        return self.element([n])

    def from_fraction(self, q: Fraction) -> "NumberFieldElement":
        return self.element([q])

    def __str__(self):
        return f"QQ[pi]/(deg {self.degree})"


@dataclass(frozen=True)
class NumberFieldElement:
    field: NumberField
    coeffs: tuple[Fraction, ...]

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise ValueError("elements of different number fields")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return NumberFieldElement(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return NumberFieldElement(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        e = self.field.degree
        prod = [Fraction(0)] * (2 * e - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        mod = self.field.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for i, m in enumerate(mod):
                    prod[k - e + i] -= c * m
        return NumberFieldElement(self.field, tuple(prod[:e]))

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElement":
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        e = self.field.degree
        modulus = [Fraction(c) for c in self.field.modulus] + [Fraction(1)]
        inv = _qpoly_invert_mod(list(self.coeffs), modulus)
        inv += [Fraction(0)] * (e - len(inv))
        return NumberFieldElement(self.field, tuple(inv[:e]))

    def __truediv__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        from .poly import join_signed_terms

        pieces = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sym = "" if i == 0 else ("pi" if i == 1 else f"pi^{i}")
            pieces.append((str(c), sym))
        return join_signed_terms(pieces)
