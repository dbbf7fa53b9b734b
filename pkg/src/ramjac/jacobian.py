"""Jacobian-type matrices, their minor ideals, and Fitting-ideal checks.

Three builders share the PolyMatrix container:

* the classical Jacobian (rows = d/dx_i), over whatever coefficient ring
  the inputs live in;
* the mixed matrix over a ramified DVR (row 0 = d_dpi, then d/dx_i mod pi),
  which presents the module of differentials killed by the uniformizer on
  the n+1 generators (dpi, dx_1, ..., dx_n);
* the unramified mixed matrix (row 0 = delta_p mod p, then p-th powers of
  the partials mod p).

Minor ideals are emitted in a fixed enumeration order (lexicographic in the
row set, then the column set) so reports and golden tests are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .calculus import d_dpi, delta_p, fiber_ring, partials_mod_pi, reduce_mod_p
from .dvr import EisensteinDVR
from .errors import PreconditionError
from .groebner import Ideal
from .poly import GREVLEX, Polynomial, PolynomialRing, mono_div, mono_divides

COFACTOR_SIZE_LIMIT = 6


class PolyMatrix:
    """A rectangular matrix of polynomials sharing one ambient ring."""

    __slots__ = ("ring", "entries", "row_labels", "col_labels")

    def __init__(self, ring: PolynomialRing, entries, row_labels=None, col_labels=None):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        for row in self.entries:
            for entry in row:
                if entry.ring != ring:
                    raise ValueError(f"ring mismatch: {entry.ring!r} vs {ring!r}")
        self.row_labels = tuple(row_labels) if row_labels else None
        self.col_labels = tuple(col_labels) if col_labels else None

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int):
        return [row[j] for row in self.entries]

    def evaluate(self, point):
        """Entrywise exact evaluation; returns rows of scalar values."""
        return [[entry.evaluate(point) for entry in row] for row in self.entries]

    def permuted_rows(self, perm) -> "PolyMatrix":
        labels = (
            tuple(self.row_labels[i] for i in perm) if self.row_labels else None
        )
        return PolyMatrix(
            self.ring, [self.entries[i] for i in perm], labels, self.col_labels
        )

    def __str__(self):
        rows = []
        for row in self.entries:
            rows.append("[" + ", ".join(str(e) for e in row) + "]")
        return "[" + "; ".join(rows) + "]"

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols} over {self.ring!r})"


def classical_jacobian(ring: PolynomialRing, generators) -> PolyMatrix:
    """The n x t matrix with entry (i, j) = d(f_j)/d(x_i), over the same ring."""
    generators = list(generators)
    n = ring.nvars
    entries = [
        [f.partial_derivative(i) for f in generators] for i in range(n)
    ]
    return PolyMatrix(
        ring,
        entries,
        row_labels=[f"d/d{v}" for v in ring.variables],
        col_labels=[f"f{j + 1}" for j in range(len(generators))],
    )


def mixed_pi_jacobian(ring: PolynomialRing, generators) -> PolyMatrix:
    """The (n+1) x t mixed matrix over F_p[x]: row 0 is d_dpi, then the
    partials reduced mod pi.

    The residue field is F_p, which is perfect, so there are no extra rows
    for derivations of the residue field.
    """
    if not isinstance(ring.scalars, EisensteinDVR):
        raise PreconditionError(
            f"the mixed pi-Jacobian needs a ramified DVR coefficient ring, got {ring.scalars}"
        )
    generators = list(generators)
    target = fiber_ring(ring)
    rows = [[d_dpi(f) for f in generators]]
    partial_columns = [partials_mod_pi(f) for f in generators]
    for i in range(ring.nvars):
        rows.append([col[i] for col in partial_columns])
    return PolyMatrix(
        target,
        rows,
        row_labels=["d/dpi"] + [f"d/d{v}" for v in ring.variables],
        col_labels=[f"f{j + 1}" for j in range(len(generators))],
    )


def hj_mixed_jacobian(ring: PolynomialRing, generators) -> PolyMatrix:
    """The (n+1) x t unramified mixed matrix over F_p[x]: row 0 is delta_p
    mod p, row i is (d(f_j)/d(x_i))^p mod p.

    Over F_p the p-th power of a reduced polynomial equals its Frobenius
    pullback, so the power rows are computed after reduction.
    """
    generators = list(generators)
    target = fiber_ring(ring)
    rows = [[reduce_mod_p(delta_p(f)) for f in generators]]
    for i in range(ring.nvars):
        rows.append(
            [reduce_mod_p(f.partial_derivative(i)).frobenius_pullback() for f in generators]
        )
    return PolyMatrix(
        target,
        rows,
        row_labels=["delta_p"] + [f"(d/d{v})^p" for v in ring.variables],
        col_labels=[f"f{j + 1}" for j in range(len(generators))],
    )


def _det_cofactor(rows, ring: PolynomialRing) -> Polynomial:
    n = len(rows)
    memo: dict = {}

    def rec(level: int, cols: tuple[int, ...]) -> Polynomial:
        if level == n:
            return ring.one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = ring.zero
        sign = 1
        for idx, j in enumerate(cols):
            entry = rows[level][j]
            if entry:
                rest = cols[:idx] + cols[idx + 1 :]
                sub = rec(level + 1, rest)
                term = entry * sub
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[cols] = total
        return total

    return rec(0, tuple(range(n)))


def _exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact polynomial quotient f / g; raises if the division is not exact."""
    ring = f.ring
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    order = GREVLEX
    gm, gc = g.leading_term(order)
    quotient: dict = {}
    rest = f
    while rest:
        m, c = rest.leading_term(order)
        if not mono_divides(gm, m):
            raise ArithmeticError("inexact polynomial division in Bareiss elimination")
        qm = mono_div(m, gm)
        qc = c / gc
        quotient[qm] = qc
        rest = rest - g.term_multiple(qc, qm)
    return Polynomial(ring, quotient)


def _det_bareiss(rows, ring: PolynomialRing) -> Polynomial:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not m[k][k]:
            for swap in range(k + 1, n):
                if m[swap][k]:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(num, prev)
            m[i][k] = ring.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def determinant(matrix: PolyMatrix, rows=None, cols=None) -> Polynomial:
    """Exact determinant of a (sub)matrix.

    Cofactor expansion with memoization for sizes up to 6; fraction-free
    Bareiss elimination above that (field coefficients only, which is all
    the larger matrices that occur here).
    """
    if rows is None:
        rows = range(matrix.nrows)
    if cols is None:
        cols = range(matrix.ncols)
    sub = [[matrix.entries[i][j] for j in cols] for i in rows]
    size = len(sub)
    if size != (len(sub[0]) if sub else 0):
        raise ValueError("determinant of a non-square selection")
    if size == 0:
        return matrix.ring.one
    if size <= COFACTOR_SIZE_LIMIT or not matrix.ring.scalars.is_field:
        return _det_cofactor(sub, matrix.ring)
    return _det_bareiss(sub, matrix.ring)


def minors_ideal(matrix: PolyMatrix, h: int) -> Ideal:
    """The ideal of all h x h minors, in the deterministic enumeration order.

    h = 0 gives the unit ideal; h exceeding either dimension gives the zero
    ideal.  Minor generators appear ordered lexicographically by row set and
    then column set, zeros included.
    """
    if h < 0:
        raise PreconditionError(f"minor size must be non-negative, got {h}")
    if h == 0:
        return Ideal(matrix.ring, (matrix.ring.one,))
    if h > matrix.nrows or h > matrix.ncols:
        return Ideal(matrix.ring, ())
    gens = []
    for rows in combinations(range(matrix.nrows), h):
        for cols in combinations(range(matrix.ncols), h):
            gens.append(determinant(matrix, rows, cols))
    return Ideal(matrix.ring, gens)


@dataclass(frozen=True)
class FittingCheck:
    """Local-freeness test of the presented module at a given rank."""

    rank: int
    fitting_is_unit: bool
    lower_fitting_is_zero: bool

    @property
    def locally_free(self) -> bool:
        return self.fitting_is_unit and self.lower_fitting_is_zero


def fitting_ideal_check(matrix: PolyMatrix, rank: int, quotient: Ideal) -> FittingCheck:
    """Check freeness of the module the matrix presents, of the given rank,
    in the quotient of the matrix ring by ``quotient``.

    With g = nrows generators, the rank-r Fitting ideal is the ideal of
    (g - r)-minors; the module is locally free of rank r iff that ideal is
    the unit ideal in the quotient and the next one up is zero there.
    """
    g = matrix.nrows
    gb = quotient.groebner()
    upper = minors_ideal(matrix, g - rank)
    combined = Ideal(matrix.ring, tuple(quotient.generators) + tuple(upper.generators))
    fitting_is_unit = combined.groebner().is_unit_ideal
    lower = minors_ideal(matrix, g - rank + 1)
    lower_zero = all(gb.contains(m) for m in lower.generators)
    return FittingCheck(rank, fitting_is_unit, lower_zero)
