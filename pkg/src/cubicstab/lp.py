"""Exact rational linear programming.

A dense two-phase simplex over exact rationals with Bland's pivoting rule,
which guarantees termination.  Everything downstream that needs a convex
certificate (hull membership, destabilizing cones) is phrased through the two
entry points here:

* ``simplex_min``   -- min c.x  s.t.  A x = b, x >= 0   (standard form)
* ``maximize``      -- max c.x  s.t.  G x <= h, x free  (solved via its dual,
  so the tableau has one row per free variable, not per constraint)

gmpy2 rationals are used when available; fractions.Fraction otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

ZERO = Q(0)
ONE = Q(1)


@dataclass
class LPResult:
    status: str          # 'optimal' | 'infeasible' | 'unbounded'
    value: object = None
    x: list = None       # primal solution (standard form variables)
    y: list = None       # simplex multipliers, one per constraint row;
                         # for 'infeasible' these form a Farkas certificate:
                         # y.A <= 0 componentwise and y.b > 0


class _Tableau:
    def __init__(self, A, b, ncols):
        self.m = len(A)
        self.ncols = ncols
        self.rows = [list(row) for row in A]
        self.b = list(b)
        self.basis = [None] * self.m

    def pivot(self, r, col):
        row = self.rows[r]
        piv = row[col]
        inv = ONE / piv
        for j in range(self.ncols):
            row[j] *= inv
        self.b[r] *= inv
        for i in range(self.m):
            if i == r:
                continue
            f = self.rows[i][col]
            if f == 0:
                continue
            other = self.rows[i]
            for j in range(self.ncols):
                other[j] -= f * row[j]
            self.b[i] -= f * self.b[r]
        self.basis[r] = col

    def solve_phase(self, cost, blocked):
        """Bland-rule simplex for min cost.x from the current basis.

        Returns 'optimal' or 'unbounded'.  ``blocked`` columns never enter.
        """
        m, ncols = self.m, self.ncols
        while True:
            # reduced costs: c_j - y.A_j with y implied by the basis
            y = [ZERO] * m
            for i, bcol in enumerate(self.basis):
                cb = cost[bcol]
                if cb:
                    y[i] = cb
            entering = -1
            for j in range(ncols):
                if j in blocked or j in self.basis_set():
                    continue
                red = cost[j]
                for i in range(m):
                    aij = self.rows[i][j]
                    if aij and y[i]:
                        red -= y[i] * aij
                if red < 0:
                    entering = j
                    break
            if entering < 0:
                return "optimal"
            # ratio test, Bland tie-break on basis column index
            leave = -1
            best = None
            for i in range(m):
                a = self.rows[i][entering]
                if a > 0:
                    ratio = self.b[i] / a
                    if best is None or ratio < best or (
                            ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            self.pivot(leave, entering)

    def basis_set(self):
        return set(self.basis)


def simplex_min(A, b, c) -> LPResult:
    """Solve min c.x subject to A x = b, x >= 0, exactly.

    A is a list of m rows of length n.  Returns an LPResult; on 'optimal' the
    multipliers y satisfy c_j - y.A_j >= 0 for every column j and y.b = value.
    """
    m = len(A)
    n = len(c)
    A = [[Q(v) for v in row] for row in A]
    b = [Q(v) for v in b]
    c = [Q(v) for v in c]
    signs = [1] * m
    for i in range(m):
        if b[i] < 0:
            signs[i] = -1
            b[i] = -b[i]
            A[i] = [-v for v in A[i]]
    # append artificial identity columns; keeping them in the tableau lets us
    # read the simplex multipliers off their reduced costs
    ncols = n + m
    for i in range(m):
        ext = [ZERO] * m
        ext[i] = ONE
        A[i] = A[i] + ext
    tab = _Tableau(A, b, ncols)
    for i in range(m):
        tab.basis[i] = n + i

    cost1 = [ZERO] * n + [ONE] * m
    tab.solve_phase(cost1, blocked=set())
    value1 = sum(tab.b[i] for i in range(m) if tab.basis[i] >= n)
    if value1 > 0:
        y = _multipliers(tab, cost1)
        y = [y[i] * signs[i] for i in range(m)]
        return LPResult("infeasible", value1, None, y)

    # drive artificials out of the basis where possible; rows that cannot be
    # cleared are redundant and pivoting is simply skipped on them
    for i in range(m):
        if tab.basis[i] >= n:
            for j in range(n):
                if tab.rows[i][j] != 0:
                    tab.pivot(i, j)
                    break

    cost2 = c + [ZERO] * m
    status = tab.solve_phase(cost2, blocked=set(range(n, ncols)))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [ZERO] * n
    for i, bcol in enumerate(tab.basis):
        if bcol < n:
            x[bcol] = tab.b[i]
    value = sum(ci * xi for ci, xi in zip(c, x))
    y = _multipliers(tab, cost2)
    y = [y[i] * signs[i] for i in range(m)]
    return LPResult("optimal", value, x, y)


def _multipliers(tab, cost):
    """y_i = cost(artificial_i) - reduced_cost(artificial_i)."""
    m = len(tab.b)
    n_art0 = tab.ncols - m
    y = [ZERO] * m
    ybase = [ZERO] * m
    for i, bcol in enumerate(tab.basis):
        cb = cost[bcol]
        if cb:
            ybase[i] = cb
    for i in range(m):
        col = n_art0 + i
        red = cost[col]
        for r in range(m):
            a = tab.rows[r][col]
            if a and ybase[r]:
                red -= ybase[r] * a
        y[i] = cost[col] - red
    return y


def maximize(c, G, h) -> LPResult:
    """Solve max c.x subject to G x <= h with x free, exactly.

    Internally solves the dual  min h.y  s.t.  G^T y = c, y >= 0,  whose row
    count equals dim(x); the optimal x is recovered from the simplex
    multipliers.  Returns LPResult with status 'optimal' (value, x),
    'infeasible', or 'unbounded'.
    """
    nx = len(c)
    nrows = len(G)
    GT = [[G[i][j] for i in range(nrows)] for j in range(nx)]
    res = simplex_min(GT, c, h)
    if res.status == "infeasible":
        # Farkas direction for the dual means the primal objective is
        # unbounded over the primal feasible set, or the primal is infeasible.
        return LPResult("unbounded")
    if res.status == "unbounded":
        return LPResult("infeasible")
    x = res.y
    value = sum(ci * xi for ci, xi in zip(c, x))
    return LPResult("optimal", value, x)
