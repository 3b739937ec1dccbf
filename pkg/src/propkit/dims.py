"""Weight-graded dimension algebra of reduced collections of operations.

A ``DimTable`` records ``dim(m outputs, n inputs, weight rho)`` over a finite
declared window.  Queries outside the window raise (never silently zero).

Products are computed through the cycle-index engine in :mod:`.symfun`.
Reading dimensions off the printed combinatorial sum with factors
``#connected * n!/(i! j!) * m!/(k! l!)`` is exact only when the actions in
play are free or the products collapse (one-output tables, algebras); the
cycle-index route computes the honest dimension in every case and agrees
with the printed sum on all of its valid instances.  The structural
enumeration in :mod:`.oracle` arbitrates.

Tables built from bare dimension data (e.g. loaded from JSON) are given the
trivial-action structure: each recorded dimension counts copies of the
trivial module.  Catalog entries carry their true structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import symfun
from .errors import ArgumentError, CapabilityError, InvariantError, WindowError

Bounds = tuple[int, int, int]


def _check_bounds(bounds) -> Bounds:
    try:
        m, n, r = bounds
    except (TypeError, ValueError):
        raise ArgumentError("bounds must be a triple (max m, max n, max rho)")
    if m < 1 or n < 1 or r < 0:
        raise ArgumentError("bounds out of range: %r" % (bounds,))
    return (int(m), int(n), int(r))


@dataclass
class DimTable:
    """Dense-window dimension table of a reduced weight-graded collection."""

    entries: dict[tuple[int, int, int], int]
    bounds: Bounds
    char: symfun.BiChar | None = field(default=None, repr=False)
    modules: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        self.bounds = _check_bounds(self.bounds)
        clean: dict[tuple[int, int, int], int] = {}
        mmax, nmax, rmax = self.bounds
        for (m, n, r), d in self.entries.items():
            if d == 0:
                continue
            if m < 1 or n < 1 or r < 0:
                raise ArgumentError("reduced tables need m, n >= 1: %r" % ((m, n, r),))
            if m > mmax or n > nmax or r > rmax:
                raise ArgumentError(
                    "entry %r outside declared bounds %r" % ((m, n, r), self.bounds)
                )
            if d < 0:
                raise ArgumentError("negative dimension at %r" % ((m, n, r),))
            clean[(m, n, r)] = int(d)
        self.entries = clean

    def get(self, m: int, n: int, rho: int) -> int:
        if m < 1 or n < 1 or rho < 0:
            raise ArgumentError("query out of range: %r" % ((m, n, rho),))
        mmax, nmax, rmax = self.bounds
        if m > mmax or n > nmax or rho > rmax:
            raise WindowError(
                "query %r outside window %r" % ((m, n, rho), self.bounds)
            )
        return self.entries.get((m, n, rho), 0)

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [(m, n, r, d) for (m, n, r), d in sorted(self.entries.items())]

    def is_connected_normalized(self) -> bool:
        """Weight-0 part is exactly the unit: entry (1,1,0) = 1 and no other
        weight-0 entry."""
        for (m, n, r), d in self.entries.items():
            if r == 0 and (m, n) != (1, 1):
                return False
        return self.entries.get((1, 1, 0), 0) == 1

    def equal_on(self, other: "DimTable", bounds: Bounds) -> bool:
        mmax, nmax, rmax = _check_bounds(bounds)
        for m in range(1, mmax + 1):
            for n in range(1, nmax + 1):
                for r in range(rmax + 1):
                    if self.get(m, n, r) != other.get(m, n, r):
                        return False
        return True

    def weight_slice(self, rho: int) -> "DimTable":
        mmax, nmax, _ = self.bounds
        entries = {k: d for k, d in self.entries.items() if k[2] == rho}
        char = None
        if self.char is not None:
            char = {k: v for k, v in self.char.items() if k[2] == rho}
        return DimTable(entries, (mmax, nmax, max(rho, 0)), char=char)


def ensured_char(t: DimTable) -> symfun.BiChar:
    """The table's cycle-index data, defaulting to trivial-action structure."""
    if t.char is not None:
        return t.char
    char: symfun.BiChar = {}
    for (m, n, r), d in t.entries.items():
        char = symfun.bc_add(
            char, symfun.bc_term(symfun.h_fn(m), symfun.h_fn(n), r, Fraction(d))
        )
    t.char = char
    return char


def unit_table(bounds: Bounds = (1, 1, 0)) -> DimTable:
    bounds = _check_bounds(bounds)
    char = symfun.bc_term({(1,): Fraction(1)}, {(1,): Fraction(1)}, 0)
    return DimTable({(1, 1, 0): 1}, bounds, char=char)


def opposite(t: DimTable) -> DimTable:
    entries = {(n, m, r): d for (m, n, r), d in t.entries.items()}
    bounds = (t.bounds[1], t.bounds[0], t.bounds[2])
    char = symfun.swap_sides(t.char) if t.char is not None else None
    modules = None
    if t.modules is not None:
        modules = {(n, m, r): spec.swapped() for (m, n, r), spec in t.modules.items()}
    return DimTable(entries, bounds, char=char, modules=modules)


def _middle_cap(q: DimTable, p: DimTable, bounds: Bounds) -> int:
    """Upper bound for the number of middle legs in a connected composition.

    Each level is a multiset of components of the corresponding table; on a
    connected-normalized table every non-unit component costs weight >= 1 and
    brings at most ``slope`` extra legs per unit of weight.
    """
    mmax, nmax, rmax = bounds

    def side_cap(t: DimTable, legs_out: bool, base: int) -> int:
        if not t.is_connected_normalized():
            raise CapabilityError(
                "connected composition needs connected-normalized factors "
                "(weight-0 part must be the unit alone)"
            )
        slope = Fraction(0)
        for (m, n, r), d in t.entries.items():
            legs = n if legs_out else m
            if r == 0:
                continue
            slope = max(slope, Fraction(legs - 1, r))
        extra = int(slope * rmax)
        return base + extra

    return min(side_cap(q, True, mmax), side_cap(p, False, nmax))


def _require_window(t: DimTable, need: Bounds, label: str) -> None:
    mmax, nmax, rmax = t.bounds
    if need[0] > mmax or need[1] > nmax or need[2] > rmax:
        raise WindowError(
            "%s table window %r too small, need %r" % (label, t.bounds, need)
        )


def boxc_dims(q: DimTable, p: DimTable, bounds: Bounds) -> DimTable:
    """Dimension table of the connected composition of ``q`` over ``p``."""
    bounds = _check_bounds(bounds)
    zmax = _middle_cap(q, p, bounds)
    _require_window(q, (bounds[0], zmax, bounds[2]), "left")
    _require_window(p, (zmax, bounds[1], bounds[2]), "right")
    char = symfun.boxtimes_c(ensured_char(q), ensured_char(p), bounds, zmax)
    return DimTable(symfun.dims_slice(char, bounds), bounds, char=char)


def sym_exp_dims(t: DimTable, bounds: Bounds) -> DimTable:
    """Free symmetric construction (multisets of components) at dimension level."""
    bounds = _check_bounds(bounds)
    char = symfun.exp_plus(ensured_char(t), bounds)
    return DimTable(symfun.dims_slice(char, bounds), bounds, char=char)


def box_dims(q: DimTable, p: DimTable, bounds: Bounds) -> DimTable:
    """Full (not necessarily connected) composition: the free symmetric
    construction applied to the connected one."""
    return sym_exp_dims(boxc_dims(q, p, bounds), bounds)


def euler_table(
    p: DimTable, pdual: DimTable, bounds: Bounds
) -> dict[tuple[int, int, int], Fraction]:
    """All Euler characteristics sum_k (-1)^k dim(dual_k boxc p_(d-k))(m,n).

    Computed in one pass by negating the dual side's weight variable.  For a
    Koszul pair the result is the unit table: 1 at (1,1,0), 0 elsewhere.
    """
    bounds = _check_bounds(bounds)
    zmax = _middle_cap(pdual, p, bounds)
    _require_window(pdual, (bounds[0], zmax, bounds[2]), "dual")
    _require_window(p, (zmax, bounds[1], bounds[2]), "primal")
    char = symfun.boxtimes_c(
        symfun.t_negate(ensured_char(pdual)), ensured_char(p), bounds, zmax
    )
    return symfun.rational_slice(char, bounds)


def euler_koszul(
    p: DimTable, pdual: DimTable, m: int, n: int, d: int
) -> Fraction:
    """Single Euler characteristic of the Koszul complex piece at (m, n, d)."""
    table = euler_table(p, pdual, (m, n, d))
    return table.get((m, n, d), Fraction(0))
