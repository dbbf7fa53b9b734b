"""Brute-force regularity checks at rational points of the special fiber.

This is the differential-testing side of the package: at a point a of
F_p^n lying on the fiber, regularity of the local ring is decided directly
from the rank of the cotangent map, computed by shifting the generators to
the point (x_i := lift(a_i) + u_i) and reading off constant and linear
parts.  No mixed-matrix machinery is involved, so agreement with the
criterion exercises two genuinely independent code paths.

Integer lifts are taken in [0, p), matching the splitting convention the
mod-pi^2 expansion uses, which makes the agreement exact rather than merely
up to units.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import FpElement
from .errors import PreconditionError

POINT_SCAN_LIMIT = 10**6


def fp_matrix_rank(rows) -> int:
    """Rank of a matrix of FpElement entries, by Gaussian elimination."""
    grid = [list(r) for r in rows]
    rank = 0
    if not grid:
        return 0
    ncols = len(grid[0])
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(grid)):
            if grid[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        grid[row], grid[pivot] = grid[pivot], grid[row]
        inv = grid[row][col].inverse()
        grid[row] = [entry * inv for entry in grid[row]]
        for r in range(len(grid)):
            if r != row and grid[r][col]:
                factor = grid[r][col]
                grid[r] = [a - factor * b for a, b in zip(grid[r], grid[row])]
        row += 1
        rank += 1
        if row == len(grid):
            break
    return rank


def _lifts(pres, point) -> list[int]:
    p = pres.dvr.p
    if len(point) != pres.nvars:
        raise ValueError(f"expected {pres.nvars} coordinates, got {len(point)}")
    out = []
    for v in point:
        if isinstance(v, FpElement):
            v = v.residue
        out.append(v % p)
    return out


def on_special_fiber(pres, point) -> bool:
    """Whether every generator vanishes modulo pi at the point."""
    lifts = _lifts(pres, point)
    consts = [pres.dvr.from_int(a) for a in lifts]
    return all(not f.evaluate(consts).residue() for f in pres.generators)


def cotangent_matrix_at_point(pres, point):
    """The t x (n+1) matrix of the cotangent map at a fiber point, over F_p.

    Row j collects, from the expansion of f_j around the lifted point, the
    pi-part of the constant term followed by the residues of the linear
    coefficients: the coordinates of f_j in the basis (pi, u_1, ..., u_n) of
    m/m^2.  Computed entirely through the shifted expansion.
    """
    lifts = _lifts(pres, point)
    n = pres.nvars
    rows = []
    for f in pres.generators:
        shifted = f.shift_substitute(lifts)
        const = shifted.constant_coefficient()
        if const.residue():
            raise PreconditionError(
                f"point {tuple(lifts)} is not on the special fiber of V(I): "
                f"{f} evaluates to {const}"
            )
        row = [const.pi2_expansion()[1]]
        for i in range(n):
            mono = tuple(1 if k == i else 0 for k in range(n))
            linear = shifted.terms.get(mono)
            row.append(
                linear.residue() if linear is not None else FpElement(0, pres.dvr.p)
            )
        rows.append(row)
    return rows


def oracle_is_regular_at_point(pres, point) -> bool:
    """Regularity at the maximal ideal over the point: cotangent rank == height."""
    h, _ = pres.height()
    return fp_matrix_rank(cotangent_matrix_at_point(pres, point)) == h


@dataclass(frozen=True)
class ScanEntry:
    point: tuple[int, ...]
    on_fiber: bool
    regular: bool | None


def scan_rational_points(pres) -> list[ScanEntry]:
    """Oracle verdicts at every point of F_p^n, in lexicographic order."""
    p = pres.dvr.p
    n = pres.nvars
    if p**n > POINT_SCAN_LIMIT:
        raise PreconditionError(
            f"scan of {p}^{n} points exceeds the {POINT_SCAN_LIMIT} guardrail"
        )
    entries = []
    for point in product(range(p), repeat=n):
        if on_special_fiber(pres, point):
            entries.append(
                ScanEntry(point, True, oracle_is_regular_at_point(pres, point))
            )
        else:
            entries.append(ScanEntry(point, False, None))
    return entries
