"""Sparse multivariate polynomials, generic over an exact coefficient domain.

Monomials are plain exponent tuples; a polynomial is a map from monomial to
nonzero coefficient together with a ring descriptor (coefficient domain plus
variable names).  Canonical form (no zero coefficients, one entry per
monomial) is restored after every operation, and printing uses a fixed
graded-reverse-lexicographic descending term order so output is
deterministic and round-trips through the expression parser.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError

Monomial = tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """A lex or grevlex term order, optionally after permuting the variables.

    ``permutation[k]`` is the index of the k-th most significant variable;
    None means the identity (variables significant in declaration order).
    """

    kind: str = "grevlex"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise InputError(f"unknown monomial order {self.kind!r}")
        if self.permutation is not None:
            perm = tuple(self.permutation)
            if sorted(perm) != list(range(len(perm))):
                raise InputError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
            object.__setattr__(self, "permutation", perm)

    def key(self, exps: Monomial):
        """Sort key: m1 precedes m2 in the order iff key(m1) > key(m2)."""
        if self.permutation is not None:
            if len(self.permutation) != len(exps):
                raise InputError(
                    f"order permutes {len(self.permutation)} variables, "
                    f"monomial has {len(exps)}"
                )
            exps = tuple(exps[i] for i in self.permutation)
        if self.kind == "lex":
            return exps
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def extended(self, extra: int = 1) -> "MonomialOrder":
        """The same order on a ring with ``extra`` new least-significant variables."""
        if self.permutation is None:
            return self
        n = len(self.permutation)
        return MonomialOrder(self.kind, self.permutation + tuple(range(n, n + extra)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def join_signed_terms(pieces: list[tuple[str, str]]) -> str:
    """Assemble (coefficient string, symbol string) pairs into an expression.

    Coefficients whose string contains a space get parenthesized; a leading
    minus on an atomic coefficient becomes a subtraction sign.  Used by the
    polynomial, DVR-element and number-field printers so they all round-trip
    through the same grammar.
    """
    if not pieces:
        return "0"
    out = []
    for cs, sym in pieces:
        if cs.startswith("-") and " " not in cs:
            sign, body = "-", cs[1:]
        elif " " in cs or cs.startswith("-"):
            sign, body = "+", f"({cs})"
        else:
            sign, body = "+", cs
        if sym:
            body = sym if body == "1" else f"{body}*{sym}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


class PolynomialRing:
    """Descriptor for R[x_1, ..., x_n] over an exact coefficient domain."""

    __slots__ = ("scalars", "variables")

    def __init__(self, scalars, variables):
        self.scalars = scalars
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InputError(f"duplicate variable names in {variables}")
        self.variables = variables

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.scalars == other.scalars
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.scalars, self.variables))

    def __repr__(self):
        return f"{self.scalars}[{', '.join(self.variables)}]"

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(self.scalars.one)

    def constant(self, coeff) -> "Polynomial":
        exps = (0,) * self.nvars
        return Polynomial(self, {exps: coeff} if coeff else {})

    def from_int(self, n: int) -> "Polynomial":
        return self.constant(self.scalars.from_int(n))

    def gen(self, which) -> "Polynomial":
        """The variable given by index or name, as a polynomial."""
        if isinstance(which, str):
            try:
                which = self.variables.index(which)
            except ValueError:
                raise InputError(f"no variable named {which!r} in {self!r}") from None
        if not 0 <= which < self.nvars:
            raise InputError(f"variable index {which} out of range")
        exps = tuple(1 if i == which else 0 for i in range(self.nvars))
        return Polynomial(self, {exps: self.scalars.one})

    def from_terms(self, terms: dict) -> "Polynomial":
        return Polynomial(self, {m: c for m, c in terms.items() if c})

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def monomial_str(self, exps: Monomial) -> str:
        factors = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_lt_cache")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lt_cache = None

    def _match(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            cur = terms.get(m)
            s = c if cur is None else cur + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            cur = terms.get(m)
            s = -c if cur is None else cur - c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                cur = terms.get(m)
                s = c if cur is None else cur + c
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, coeff) -> "Polynomial":
        if not coeff:
            return self.ring.zero
        return Polynomial(self.ring, {m: c * coeff for m, c in self.terms.items()})

    def term_multiple(self, coeff, exps: Monomial) -> "Polynomial":
        """The product coeff * x^exps * self."""
        if not coeff:
            return self.ring.zero
        return Polynomial(
            self.ring, {mono_mul(m, exps): c * coeff for m, c in self.terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.scalars.zero)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        """(monomial, coefficient) of the largest term, or None if zero."""
        if not self.terms:
            return None
        cache = self._lt_cache
        if cache is None:
            cache = {}
            self._lt_cache = cache
        hit = cache.get(order)
        if hit is None:
            m = max(self.terms, key=order.key)
            hit = (m, self.terms[m])
            cache[order] = hit
        return hit

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        lt = self.leading_term(order)
        if lt is None:
            return self
        _, c = lt
        if c == self.ring.scalars.one:
            return self
        inv = self.ring.scalars.one / c
        return self.scale(inv)

    def partial_derivative(self, which) -> "Polynomial":
        if isinstance(which, str):
            try:
                which = self.ring.variables.index(which)
            except ValueError:
                raise InputError(
                    f"no variable named {which!r} in {self.ring!r}"
                ) from None
        if not 0 <= which < self.ring.nvars:
            raise InputError(f"variable index {which} out of range")
        scalars = self.ring.scalars
        terms: dict = {}
        for m, c in self.terms.items():
            e = m[which]
            if e == 0:
                continue
            d = c * scalars.from_int(e)
            if not d:
                continue
            dm = tuple(x - 1 if i == which else x for i, x in enumerate(m))
            terms[dm] = d
        return Polynomial(self.ring, terms)

    def frobenius_pullback(self) -> "Polynomial":
        """Substitute x_i -> x_i^p, coefficients unchanged."""
        from .arith import LocalRationals, PrimeField

        scalars = self.ring.scalars
        if not isinstance(scalars, (PrimeField, LocalRationals)):
            raise ValueError(
                "frobenius pullback requires coefficients in F_p or Z_(p)"
            )
        p = scalars.p
        return Polynomial(
            self.ring, {tuple(e * p for e in m): c for m, c in self.terms.items()}
        )

    def evaluate(self, point):
        """Exact evaluation at a vector of coefficient-domain elements (ints coerced)."""
        scalars = self.ring.scalars
        if len(point) != self.ring.nvars:
            raise ValueError(
                f"expected {self.ring.nvars} coordinates, got {len(point)}"
            )
        point = [scalars.from_int(v) if isinstance(v, int) else v for v in point]
        total = scalars.zero
        for m, c in self.terms.items():
            val = c
            for v, e in zip(point, m):
                if e:
                    val = val * v**e
            total = total + val
        return total

    def shift_substitute(self, lifts) -> "Polynomial":
        """Substitute x_i := lifts[i] + u_i and expand exactly.

        Returns a polynomial in fresh variables u1..un over the same
        coefficient domain; ``lifts`` is a vector of integers.
        """
        n = self.ring.nvars
        if len(lifts) != n:
            raise ValueError(f"expected {n} lifts, got {len(lifts)}")
        scalars = self.ring.scalars
        target = PolynomialRing(scalars, tuple(f"u{i + 1}" for i in range(n)))
        result: dict = {}
        for m, c in self.terms.items():
            # expand prod_i (a_i + u_i)^{e_i} term by term via binomials
            expansion = {(0,) * n: c}
            for i, e in enumerate(m):
                if e == 0:
                    continue
                a = lifts[i]
                powers = [scalars.from_int(comb(e, j) * a ** (e - j)) for j in range(e + 1)]
                new: dict = {}
                for mm, cc in expansion.items():
                    for j in range(e + 1):
                        w = cc * powers[j]
                        if not w:
                            continue
                        key = tuple(x + j if k == i else x for k, x in enumerate(mm))
                        cur = new.get(key)
                        s = w if cur is None else cur + w
                        if s:
                            new[key] = s
                        else:
                            new.pop(key, None)
                expansion = new
            for mm, cc in expansion.items():
                cur = result.get(mm)
                s = cc if cur is None else cur + cc
                if s:
                    result[mm] = s
                else:
                    result.pop(mm, None)
        return Polynomial(target, result)

    def map_coefficients(self, func, target_ring: PolynomialRing) -> "Polynomial":
        """Apply ``func`` to every coefficient, landing in ``target_ring``.

        The target must have the same number of variables; zero images are
        dropped, restoring canonical form.
        """
        if target_ring.nvars != self.ring.nvars:
            raise ValueError("coefficient maps must preserve the variable count")
        terms = {}
        for m, c in self.terms.items():
            v = func(c)
            if v:
                terms[m] = v
        return Polynomial(target_ring, terms)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __str__(self):
        pieces = [
            (str(c), self.ring.monomial_str(m)) for m, c in self.sorted_terms()
        ]
        return join_signed_terms(pieces)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"
