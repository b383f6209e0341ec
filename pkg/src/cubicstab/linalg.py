"""Exact hyperplane and convex-position computations on the simplex.

Everything here is exact: integer fraction-free elimination for normal
vectors, and rational LP (see lp.py) for the position of the barycenter
relative to the convex hull of a support, with re-verified certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lp import maximize, simplex_min
from .simplex import (SimplexContext, SupportSet, WeightVector,
                      check_weight_vector, pairing, reduce_vector)

OUTSIDE = "outside"
BOUNDARY = "boundary"
INTERIOR = "relative-interior"


@dataclass
class HullLocation:
    """Position of the barycenter relative to conv(support).

    * outside            -- separator pairs > 0 with every support point
    * boundary           -- combination exists and a nonzero separator pairs
                            >= 0 with every support point
    * relative-interior  -- combination exists with all weights > 0

    ``combination`` is a list of (monomial index, weight) with positive
    rational weights summing to 1.  Certificates are re-checked by pure
    arithmetic before the verdict is returned.
    """

    verdict: str
    separator: Optional[WeightVector] = None
    combination: Optional[list] = None


def _ff_echelon(rows):
    """Fraction-free (Bareiss) row echelon of an integer matrix, in place.

    Returns the list of pivot columns; the rank is its length.
    """
    m = len(rows)
    ncols = len(rows[0])
    piv_cols = []
    r = 0
    prev = 1
    for col in range(ncols):
        sel = next((i for i in range(r, m) if rows[i][col]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        lead = rows[r][col]
        for i in range(r + 1, m):
            fi = rows[i][col]
            row = rows[i]
            top = rows[r]
            for j in range(ncols):
                row[j] = (row[j] * lead - fi * top[j]) // prev
        prev = lead
        piv_cols.append(col)
        r += 1
    return piv_cols


def integer_kernel_vector(rows) -> Optional[tuple]:
    """Reduced integer kernel vector of an integer matrix with corank 1.

    Returns None when the rank is below ncols-1 (kernel dimension > 1); the
    matrix having full column rank is a caller error here.
    """
    ncols = len(rows[0])
    work = [list(map(int, row)) for row in rows]
    piv_cols = _ff_echelon(work)
    rank = len(piv_cols)
    if rank < ncols - 1:
        return None
    if rank == ncols:
        raise ValueError("matrix has trivial kernel")
    free = next(c for c in range(ncols) if c not in piv_cols)
    x = [Fraction(0)] * ncols
    x[free] = Fraction(1)
    for i in reversed(range(rank)):
        col = piv_cols[i]
        s = sum(work[i][j] * x[j] for j in range(col + 1, ncols))
        x[col] = Fraction(-s, work[i][col])
    den = math.lcm(*(f.denominator for f in x))
    v = [int(f * den) for f in x]
    g = math.gcd(*(abs(a) for a in v))
    v = tuple(a // g for a in v)
    if next(a for a in v if a) < 0:
        v = tuple(-a for a in v)
    return v


def normal_through(ctx: SimplexContext, points) -> Optional[WeightVector]:
    """Reduced weight-0 normal of the hyperplane through the points and the
    barycenter, or None when the span with the barycenter is degenerate.

    Expects n-1 simplex points; the all-ones row stands in for the barycenter
    (same span, integer entries).
    """
    points = [tuple(p) for p in points]
    if len(points) != ctx.n - 1:
        raise ValueError("need %d points, got %d" % (ctx.n - 1, len(points)))
    for p in points:
        if p not in ctx.index:
            raise ValueError("point %r is not in the simplex" % (p,))
    rows = [list(p) for p in points] + [[1] * ctx.nvars]
    v = integer_kernel_vector(rows)
    if v is None:
        return None
    assert sum(v) == 0
    return v


def _integerize(x) -> tuple:
    """Scale a rational vector to a reduced integer vector, same direction."""
    fracs = [Fraction(int(v.numerator), int(v.denominator)) for v in x]
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*(abs(a) for a in ints))
    if g == 0:
        raise ValueError("zero vector")
    return tuple(a // g for a in ints)


def _support_points(ctx: SimplexContext, s: SupportSet):
    if not s:
        raise ValueError("empty support")
    if s.size != ctx.size:
        raise ValueError("support does not match context")
    idx = s.indices()
    return idx, [ctx.monomials[i] for i in idx]


def _membership_rows(ctx, points):
    """Equality system: sum lam_i (n+1) p_i = d * ones, sum lam_i = 1."""
    nv = ctx.nvars
    A = [[(nv * p[k]) for p in points] for k in range(nv)]
    A.append([1] * len(points))
    b = [ctx.d] * nv + [1]
    return A, b


def _weight_zero_separator(ctx, y):
    """Turn LP row multipliers into a weight-0 separating vector.

    y has one entry per coordinate row plus one for the combination row; the
    coordinate part is negated and projected onto total weight 0.
    """
    nv = ctx.nvars
    yv = [Fraction(int(v.numerator), int(v.denominator)) for v in y[:nv]]
    wt = sum(yv)
    r = [-(v - Fraction(wt, nv)) for v in yv]
    return _integerize(r)


def _degenerate_normal(points, nvars):
    """A nonzero integer vector orthogonal to every point and to the all-ones
    vector, or None when the points span the whole space.

    Such a vector witnesses that the support is not full-dimensional: it is a
    weight-0 direction pairing 0 with the entire support.
    """
    work = [list(map(int, p)) for p in points] + [[1] * nvars]
    rows = [row[:] for row in work]
    piv_cols = _ff_echelon(rows)
    rank = len(piv_cols)
    if rank == nvars:
        return None
    free = next(c for c in range(nvars) if c not in piv_cols)
    x = [Fraction(0)] * nvars
    x[free] = Fraction(1)
    for i in reversed(range(rank)):
        col = piv_cols[i]
        ssum = sum(rows[i][j] * x[j] for j in range(col + 1, nvars))
        x[col] = Fraction(-ssum, rows[i][col])
    return _integerize(x)


def hull_locate(ctx: SimplexContext, s: SupportSet) -> HullLocation:
    """Exact position of the barycenter relative to conv(s).

    ``relative-interior`` here means interior with respect to the full weight
    hyperplane: the hull must be full-dimensional with the barycenter in its
    interior.  A lower-dimensional hull through the barycenter is ``boundary``
    (its orthogonal weight-0 direction is a valid non-strict separator).

    Decided by rational LP: convex-combination feasibility, then a
    positive-weight sweep for interior.  The boundary separator comes from
    the multipliers of the blocked weight, or from the orthogonal direction
    in the degenerate case.
    """
    idx, points = _support_points(ctx, s)
    A, b = _membership_rows(ctx, points)
    res = simplex_min(A, b, [0] * len(points))
    if res.status == "infeasible":
        r = _weight_zero_separator(ctx, res.y)
        _check_pairings(r, points, strict=True)
        return HullLocation(OUTSIDE, separator=r)

    flat = _degenerate_normal(points, ctx.nvars)
    if flat is not None:
        _check_pairings(flat, points, strict=False)
        comb = [(i, w) for (i, w) in _average_combination(
            idx, points, [res.x], ctx) if w > 0]
        return HullLocation(BOUNDARY, separator=flat, combination=comb)

    # eta is in the hull; it is in the relative interior iff every weight can
    # be made positive (averaging feasible solutions is again feasible)
    n = len(points)
    solutions = [res.x]
    covered = {j for j in range(n) if res.x[j] > 0}
    for j in range(n):
        if j in covered:
            continue
        c = [0] * n
        c[j] = -1
        rj = simplex_min(A, b, c)
        assert rj.status == "optimal"
        if -rj.value > 0:
            solutions.append(rj.x)
            covered |= {i for i in range(n) if rj.x[i] > 0}
        else:
            r = _weight_zero_separator(ctx, rj.y)
            _check_pairings(r, points, strict=False)
            assert pairing(r, points[j]) > 0
            comb = _average_combination(idx, points, solutions, ctx)
            return HullLocation(BOUNDARY, separator=r, combination=comb)
    comb = _average_combination(idx, points, solutions, ctx)
    assert all(w > 0 for _, w in comb)
    return HullLocation(INTERIOR, combination=comb)


def _average_combination(idx, points, solutions, ctx):
    n = len(points)
    k = len(solutions)
    lam = [sum(Fraction(int(sol[j].numerator), int(sol[j].denominator))
               for sol in solutions) / k for j in range(n)]
    assert sum(lam) == 1
    for coord in range(ctx.nvars):
        assert sum(l * p[coord] for l, p in zip(lam, points)) == ctx.barycenter[coord]
    return [(i, w) for i, w in zip(idx, lam)]


def _check_pairings(r, points, strict):
    check_weight_vector(r)
    for p in points:
        v = pairing(r, p)
        if v < 0 or (strict and v == 0):
            raise AssertionError("separator %r fails on %r" % (r, p))


def cone_witness(ctx: SimplexContext, s: SupportSet,
                 strict: bool = False) -> Optional[WeightVector]:
    """A nonzero weight-0 integer vector pairing >= 0 (or > 0 when strict)
    with every monomial of s, or None when no such vector exists.

    Existence is decided by bounded LPs: one coordinate-maximization per
    variable for the closed cone, a single max-margin LP for the open one.
    """
    _, points = _support_points(ctx, s)
    nv = ctx.nvars
    if strict:
        # max t  s.t.  p.r >= t, wt(r) = 0, -1 <= r_k <= 1, t <= 1
        G, h = [], []
        for p in points:
            G.append([-v for v in p] + [1])
            h.append(0)
        G.append([1] * nv + [0]); h.append(0)
        G.append([-1] * nv + [0]); h.append(0)
        for k in range(nv):
            row = [0] * (nv + 1); row[k] = 1
            G.append(row); h.append(1)
            row = [0] * (nv + 1); row[k] = -1
            G.append(row); h.append(1)
        row = [0] * (nv + 1); row[nv] = 1
        G.append(row); h.append(1)
        res = maximize([0] * nv + [1], G, h)
        assert res.status == "optimal"
        if res.value <= 0:
            return None
        r = _integerize(res.x[:nv])
        _check_pairings(r, points, strict=True)
        return r

    G, h = [], []
    for p in points:
        G.append([-v for v in p])
        h.append(0)
    G.append([1] * nv); h.append(0)
    G.append([-1] * nv); h.append(0)
    for k in range(nv):
        row = [0] * nv; row[k] = 1
        G.append(row); h.append(1)
        row = [0] * nv; row[k] = -1
        G.append(row); h.append(1)
    for k in range(nv):
        c = [0] * nv
        c[k] = 1
        res = maximize(c, G, h)
        assert res.status == "optimal"
        if res.value > 0:
            r = _integerize(res.x)
            _check_pairings(r, points, strict=False)
            return r
    return None
