"""Buchberger's algorithm and the ideal-theoretic queries built on it.

The engine is deliberately textbook: normal pair-selection strategy
(smallest lcm degree first), the coprime-leading-term and chain criteria
for pruning, then minimalization and tail reduction to the unique reduced
basis.  Coefficients must form a field (F_p, Q, or a number field);
everything is exact and deterministic, so repeated runs produce identical
bases and golden tests are stable.

Dimension is computed combinatorially from the leading-term ideal: the
dimension of the quotient is the largest number of variables no leading
term is supported on.  Radical membership uses one fresh variable
(f in rad(I) iff 1 in I + (1 - z f)), which is all the radical machinery
the locus comparisons need.
"""

from __future__ import annotations

from itertools import combinations

from .errors import PreconditionError
from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DIMENSION_VARIABLE_LIMIT = 12


def _require_field(ring: PolynomialRing):
    if not ring.scalars.is_field:
        raise PreconditionError(
            f"field coefficients required for Groebner computations, got {ring.scalars}"
        )


def _reduce_terms(terms: dict, reducers, order: MonomialOrder) -> dict:
    """Full remainder of a term dict modulo monic reducers [(lt, terms), ...]."""
    key = order.key
    work = dict(terms)
    remainder: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lt, gterms in reducers:
            if mono_divides(lt, m):
                q = mono_div(m, lt)
                for gm, gc in gterms.items():
                    if gm == lt:
                        continue
                    mm = mono_mul(gm, q)
                    cur = work.get(mm)
                    s = -(c * gc) if cur is None else cur - c * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return remainder


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """The remainder of f under multivariate division by a basis.

    Against a reduced Groebner basis this is the unique normal form; the
    basis may be a GroebnerBasis or a plain sequence of polynomials.
    """
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        reducers = basis._reducers
    else:
        order = order or GREVLEX
        reducers = _make_reducers(basis, order)
    return Polynomial(f.ring, _reduce_terms(f.terms, reducers, order))


def _make_reducers(polys, order: MonomialOrder):
    reducers = []
    for g in polys:
        if not g:
            continue
        g = g.monic(order)
        lt, _ = g.leading_term(order)
        reducers.append((lt, g.terms))
    return reducers


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S(f, g) = x^(L-lt f)/lc(f) * f - x^(L-lt g)/lc(g) * g, L = lcm of leading monomials."""
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    one = f.ring.scalars.one
    return f.term_multiple(one / cf, mono_div(lcm, mf)) - g.term_multiple(
        one / cg, mono_div(lcm, mg)
    )


def buchberger(
    generators,
    order: MonomialOrder | None = None,
    ring: PolynomialRing | None = None,
    verify: bool = False,
) -> "GroebnerBasis":
    """The unique reduced Groebner basis of the ideal the generators span.

    With ``verify=True`` the result is checked post hoc: every S-polynomial
    of the output must reduce to zero.
    """
    generators = list(generators)
    if ring is None:
        if not generators:
            raise ValueError("a ring is required for an empty generator list")
        ring = generators[0].ring
    _require_field(ring)
    order = order or GREVLEX
    for g in generators:
        if g.ring != ring:
            raise ValueError(f"ring mismatch: {g.ring!r} vs {ring!r}")

    basis = []
    for g in generators:
        if g:
            basis.append(g.monic(order))

    def lt(i):
        return basis[i].leading_term(order)[0]

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_sort_key(pair):
        lcm = mono_lcm(lt(pair[0]), lt(pair[1]))
        return (mono_degree(lcm), order.key(lcm), pair)

    while pairs:
        i, j = min(pairs, key=pair_sort_key)
        pairs.discard((i, j))
        lti, ltj = lt(i), lt(j)
        lcm = mono_lcm(lti, ltj)
        if lcm == mono_mul(lti, ltj):
            continue  # coprime leading terms: S-polynomial reduces to zero
        if _chain_criterion(i, j, lcm, pairs, basis, order):
            continue
        s = spolynomial(basis[i], basis[j], order)
        r = Polynomial(ring, _reduce_terms(s.terms, _make_reducers(basis, order), order))
        if r:
            basis.append(r.monic(order))
            k = len(basis) - 1
            pairs.update((m, k) for m in range(k))

    reduced = _interreduce(basis, order)
    gb = GroebnerBasis(ring, order, tuple(reduced))
    if verify:
        gb.verify()
    return gb


def _chain_criterion(i, j, lcm, pairs, basis, order) -> bool:
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if not mono_divides(basis[k].leading_term(order)[0], lcm):
            continue
        ik = (min(i, k), max(i, k))
        jk = (min(j, k), max(j, k))
        if ik not in pairs and jk not in pairs:
            return True
    return False


def _interreduce(polys, order: MonomialOrder):
    # minimalize: drop elements whose leading term another leading term divides
    polys = sorted(
        (g for g in polys if g), key=lambda g: order.key(g.leading_term(order)[0])
    )
    minimal = []
    for g in polys:
        m = g.leading_term(order)[0]
        if any(mono_divides(h.leading_term(order)[0], m) for h in minimal):
            continue
        minimal.append(g)
    # tail-reduce each element against the others
    reduced = []
    for idx, g in enumerate(minimal):
        others = _make_reducers(minimal[:idx] + minimal[idx + 1 :], order)
        r = Polynomial(g.ring, _reduce_terms(g.terms, others, order))
        reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_term(order)[0]), reverse=True)
    return reduced


class GroebnerBasis:
    """A reduced Groebner basis: monic, mutually irreducible, unique."""

    __slots__ = ("ring", "order", "polys", "_reducers")

    def __init__(self, ring: PolynomialRing, order: MonomialOrder, polys):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self._reducers = _make_reducers(self.polys, order)

    @property
    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.polys if g)

    @property
    def is_zero_ideal(self) -> bool:
        return not self.polys

    def normal_form(self, f: Polynomial) -> Polynomial:
        return Polynomial(f.ring, _reduce_terms(f.terms, self._reducers, self.order))

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def leading_monomials(self):
        return [g.leading_term(self.order)[0] for g in self.polys]

    def verify(self):
        """Check the Buchberger property: every S-polynomial reduces to zero."""
        for i in range(len(self.polys)):
            for j in range(i):
                s = spolynomial(self.polys[i], self.polys[j], self.order)
                if self.normal_form(s):
                    raise RuntimeError(
                        f"S-polynomial of basis elements {j} and {i} does not "
                        "reduce to zero; the basis is not a Groebner basis"
                    )

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.polys == other.polys
        )

    def __str__(self):
        if not self.polys:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.polys) + ")"

    def __repr__(self):
        return f"GroebnerBasis{self}"


class Ideal:
    """A generator list with cached Groebner bases, one per monomial order."""

    __slots__ = ("ring", "generators", "_bases")

    def __init__(self, ring: PolynomialRing, generators=()):
        self.ring = ring
        self.generators = tuple(generators)
        for g in self.generators:
            if g.ring != ring:
                raise ValueError(f"ring mismatch: {g.ring!r} vs {ring!r}")
        self._bases = {}

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or GREVLEX
        gb = self._bases.get(order)
        if gb is None:
            gb = buchberger(self.generators, order=order, ring=self.ring)
            self._bases[order] = gb
        return gb

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


def ideal_member(f: Polynomial, ideal) -> bool:
    """Exact membership test via normal form against the reduced basis."""
    gb = ideal.groebner() if isinstance(ideal, Ideal) else ideal
    return gb.contains(f)


def _fresh_variable(names) -> str:
    if "z" not in names:
        return "z"
    k = 0
    while f"z{k}" in names:
        k += 1
    return f"z{k}"


def _lift_appending(f: Polynomial, target: PolynomialRing, extra: int = 1) -> Polynomial:
    return Polynomial(
        target, {m + (0,) * extra: c for m, c in f.terms.items()}
    )


def radical_member(f: Polynomial, ideal: Ideal) -> bool:
    """f lies in the radical iff 1 in I + (1 - z f) with z a fresh variable."""
    ring = ideal.ring
    _require_field(ring)
    name = _fresh_variable(ring.variables)
    ext = PolynomialRing(ring.scalars, ring.variables + (name,))
    gens = [_lift_appending(g, ext) for g in ideal.generators]
    z = ext.gen(ext.nvars - 1)
    gens.append(ext.one - z * _lift_appending(f, ext))
    gb = buchberger(gens, order=GREVLEX, ring=ext)
    return gb.is_unit_ideal


def ideal_dimension(ideal: Ideal, order: MonomialOrder | None = None) -> int:
    """Krull dimension of the quotient by the ideal; -1 for the unit ideal.

    A set U of variables is independent when no leading term of the reduced
    basis is supported entirely inside U; the dimension is the largest such
    |U|.
    """
    n = ideal.ring.nvars
    if n > DIMENSION_VARIABLE_LIMIT:
        raise PreconditionError(
            f"dimension search supports at most {DIMENSION_VARIABLE_LIMIT} "
            f"variables, got {n}"
        )
    gb = ideal.groebner(order)
    if gb.is_unit_ideal:
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials()]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if all(not s <= chosen for s in supports):
                return size
    raise AssertionError("unreachable: the empty set is independent for proper ideals")


def ideal_height(ideal: Ideal, order: MonomialOrder | None = None) -> int:
    """Height of a proper ideal of F[x_1..x_n], as nvars - dimension."""
    dim = ideal_dimension(ideal, order)
    if dim < 0:
        raise PreconditionError("the unit ideal is improper and has no height")
    return ideal.ring.nvars - dim


def radical_equal(a: Ideal, b: Ideal) -> bool:
    """Whether the two ideals cut out the same set, i.e. have equal radicals."""
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    return all(radical_member(g, b) for g in a.generators if g) and all(
        radical_member(g, a) for g in b.generators if g
    )
