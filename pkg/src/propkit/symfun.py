"""Truncated cycle-index series for pairs of symmetric-group actions.

A weight-graded collection of (S_m, S_n)-bimodules is stored as a sparse
dictionary mapping ``(lam_x, lam_y, rho)`` to an exact rational: the
coefficient of ``p_{lam_x}(x) * p_{lam_y}(y) * t^rho`` in the two-alphabet
characteristic.  The coefficient of the identity classes ``(1^m, 1^n)``
times ``m! n!`` recovers the plain dimension, so the dimension tables exposed
elsewhere are slices of these series.

Three operations drive everything:

* ``mul`` - concatenation of collections (polynomial product);
* ``exp_plus`` / ``log_plus`` - free symmetric (multiset) construction and
  its inverse, as plethystic exponential/logarithm;
* ``pair_z`` - gluing all legs of a middle alphabet through the regular
  representation (the Cauchy pairing with the z_lambda weights).

Connected composition of collections is ``log_plus(pair_z(exp_plus(Q),
exp_plus(P)))``: build both levels as multisets, match all middle legs,
extract the connected part.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import InvariantError

BiChar = dict  # {(lam_x: tuple, lam_y: tuple, rho: int): Fraction}


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as descending tuples (partitions(0) == ((),))."""
    if n == 0:
        return ((),)
    out = []

    def rec(left: int, maxpart: int, acc: tuple[int, ...]):
        if left == 0:
            out.append(acc)
            return
        for p in range(min(left, maxpart), 0, -1):
            rec(left - p, p, acc + (p,))

    rec(n, n, ())
    return tuple(out)


@lru_cache(maxsize=None)
def zlam(lam: tuple[int, ...]) -> int:
    """Centralizer order of the conjugacy class lam."""
    out = 1
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        out *= part**m
        for i in range(2, m + 1):
            out *= i
    return out


def merge(lam1: tuple[int, ...], lam2: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(lam1 + lam2, reverse=True))


@lru_cache(maxsize=None)
def mobius(k: int) -> int:
    if k == 1:
        return 1
    out = 1
    n = k
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# single-alphabet building blocks: {partition: coefficient of p_lam}

def h_fn(n: int) -> dict[tuple[int, ...], Fraction]:
    """Characteristic of the trivial S_n-module."""
    return {lam: Fraction(1, zlam(lam)) for lam in partitions(n)}


def e_fn(n: int) -> dict[tuple[int, ...], Fraction]:
    """Characteristic of the sign S_n-module."""
    return {
        lam: Fraction((-1) ** (n - len(lam)), zlam(lam)) for lam in partitions(n)
    }


def reg_fn(n: int) -> dict[tuple[int, ...], Fraction]:
    """Characteristic of the regular S_n-module: p_1^n."""
    return {(1,) * n: Fraction(1)}


def lie_fn(n: int) -> dict[tuple[int, ...], Fraction]:
    """Characteristic of the multilinear part of the free Lie algebra:
    (1/n) * sum_{d | n} mu(d) p_d^(n/d)."""
    out: dict[tuple[int, ...], Fraction] = {}
    for d in range(1, n + 1):
        if n % d == 0:
            m = mobius(d)
            if m:
                out[(d,) * (n // d)] = Fraction(m, n)
    return out


def omega_fn(f: Mapping[tuple[int, ...], Fraction]) -> dict[tuple[int, ...], Fraction]:
    """Standard involution: p_lam -> (-1)^(|lam| - len(lam)) p_lam."""
    return {lam: c * (-1) ** (sum(lam) - len(lam)) for lam, c in f.items()}


# ---------------------------------------------------------------------------
# two-alphabet graded series

def bc_term(
    fx: Mapping[tuple[int, ...], Fraction],
    fy: Mapping[tuple[int, ...], Fraction],
    rho: int,
    scale: Fraction = Fraction(1),
) -> BiChar:
    """Outer product fx(x) * fy(y) * t^rho."""
    return {
        (lx, ly, rho): cx * cy * scale
        for lx, cx in fx.items()
        for ly, cy in fy.items()
        if cx and cy
    }


def bc_add(a: BiChar, b: BiChar) -> BiChar:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, Fraction(0)) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def bc_scale(a: BiChar, c: Fraction) -> BiChar:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def bc_truncate(a: BiChar, bounds: tuple[int, int, int]) -> BiChar:
    xmax, ymax, rmax = bounds
    return {
        (lx, ly, r): v
        for (lx, ly, r), v in a.items()
        if sum(lx) <= xmax and sum(ly) <= ymax and r <= rmax
    }


def bc_mul(a: BiChar, b: BiChar, bounds: tuple[int, int, int]) -> BiChar:
    xmax, ymax, rmax = bounds
    out: BiChar = {}
    for (lx1, ly1, r1), c1 in a.items():
        for (lx2, ly2, r2), c2 in b.items():
            r = r1 + r2
            if r > rmax:
                continue
            lx = merge(lx1, lx2)
            if sum(lx) > xmax:
                continue
            ly = merge(ly1, ly2)
            if sum(ly) > ymax:
                continue
            key = (lx, ly, r)
            s = out.get(key, Fraction(0)) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def p_substitute(a: BiChar, k: int, bounds: tuple[int, int, int]) -> BiChar:
    """Plethysm by p_k: stretch every part and the weight by k."""
    xmax, ymax, rmax = bounds
    out: BiChar = {}
    for (lx, ly, r), c in a.items():
        if sum(lx) * k > xmax or sum(ly) * k > ymax or r * k > rmax:
            continue
        out[(tuple(p * k for p in lx), tuple(p * k for p in ly), r * k)] = c
    return out


def _check_reduced(a: BiChar, what: str) -> None:
    for (lx, ly, _r) in a:
        if not lx or not ly:
            raise InvariantError("%s requires a reduced series (m, n >= 1)" % what)


def exp_plus(a: BiChar, bounds: tuple[int, int, int]) -> BiChar:
    """Plethystic exponential minus one: multisets of one or more elements."""
    _check_reduced(a, "exp_plus")
    xmax, ymax, rmax = bounds
    kmax = min(xmax, ymax)
    g: BiChar = {}
    for k in range(1, kmax + 1):
        g = bc_add(g, bc_scale(p_substitute(a, k, bounds), Fraction(1, k)))
    out: BiChar = {}
    term: BiChar = {k: v for k, v in g.items()}
    j = 1
    while term:
        out = bc_add(out, term)
        j += 1
        term = bc_scale(bc_mul(term, g, bounds), Fraction(1, j))
    return out


def log_plus(a: BiChar, bounds: tuple[int, int, int]) -> BiChar:
    """Inverse of exp_plus (plethystic logarithm of 1 + a)."""
    _check_reduced(a, "log_plus")
    xmax, ymax, rmax = bounds
    h: BiChar = {}
    term: BiChar = dict(a)
    j = 1
    while term:
        h = bc_add(h, bc_scale(term, Fraction((-1) ** (j - 1), j)))
        j += 1
        term = bc_mul(term, a, bounds)
    out: BiChar = {}
    for k in range(1, min(xmax, ymax) + 1):
        m = mobius(k)
        if m:
            out = bc_add(out, bc_scale(p_substitute(h, k, bounds), Fraction(m, k)))
    return out


def pair_z(a: BiChar, b: BiChar, bounds: tuple[int, int, int]) -> BiChar:
    """Glue the inner alphabet: sum over nu of a[.,nu,.] b[nu,.,.] z_nu.

    ``a`` is read with keys (lam_x, nu, rho), ``b`` with keys (nu, lam_y,
    rho'); the nu legs are matched through the regular representation.
    """
    xmax, ymax, rmax = bounds
    by_nu: dict[tuple[int, ...], list] = {}
    for (nu, ly, r2), c2 in b.items():
        if sum(ly) <= ymax and r2 <= rmax:
            by_nu.setdefault(nu, []).append((ly, r2, c2))
    out: BiChar = {}
    for (lx, nu, r1), c1 in a.items():
        if sum(lx) > xmax or r1 > rmax:
            continue
        hits = by_nu.get(nu)
        if not hits:
            continue
        zc = c1 * zlam(nu)
        for ly, r2, c2 in hits:
            r = r1 + r2
            if r > rmax:
                continue
            key = (lx, ly, r)
            s = out.get(key, Fraction(0)) + zc * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def boxtimes_c(
    q: BiChar, p: BiChar, bounds: tuple[int, int, int], zmax: int
) -> BiChar:
    """Characteristic of the connected composition of two reduced collections.

    ``q`` supplies the output level (legs: x outputs, z inputs), ``p`` the
    input level (z outputs, y inputs).  All z legs are matched.
    """
    xmax, ymax, rmax = bounds
    eq = exp_plus(q, (xmax, zmax, rmax))
    ep = exp_plus(p, (zmax, ymax, rmax))
    glued = pair_z(eq, ep, bounds)
    return log_plus(glued, bounds)


def t_negate(a: BiChar) -> BiChar:
    return {k: v * (-1) ** k[2] for k, v in a.items()}


def swap_sides(a: BiChar) -> BiChar:
    return {(ly, lx, r): v for (lx, ly, r), v in a.items()}


def dims_slice(a: BiChar, bounds: tuple[int, int, int]) -> dict[tuple[int, int, int], int]:
    """Extract plain dimensions: dim(m,n,rho) = m! n! [p_1^m p_1^n t^rho]."""
    out: dict[tuple[int, int, int], int] = {}
    for key, val in rational_slice(a, bounds).items():
        if val.denominator != 1 or val < 0:
            raise InvariantError(
                "non-integral dimension %s at (%d, %d, %d)" % ((val,) + key)
            )
        out[key] = int(val)
    return out


def rational_slice(
    a: BiChar, bounds: tuple[int, int, int]
) -> dict[tuple[int, int, int], Fraction]:
    """Identity-class slice without sign or integrality constraints.

    Used for Euler characteristics, where alternating sums may be negative.
    """
    xmax, ymax, rmax = bounds
    out: dict[tuple[int, int, int], Fraction] = {}
    for m in range(1, xmax + 1):
        for n in range(1, ymax + 1):
            for r in range(0, rmax + 1):
                c = a.get(((1,) * m, (1,) * n, r))
                if c:
                    out[(m, n, r)] = c * factorial(m) * factorial(n)
    return out
