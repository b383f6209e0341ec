"""Action of linear coordinate changes on supports, and inclusion chains.

A substitution acts on a support monomial-by-monomial: each monomial expands
to a polynomial whose support is computed exactly over the rationals, and the
images are unioned.  Because family members carry independent generic
coefficients, cancellation across different source monomials cannot happen,
so this union is the support of the transformed family.

Inclusion chains are sequences of certified steps (enlarge the support, shrink
it by coefficient specialization, or substitute coordinates) that carry one
family's support into another's, establishing orbit-closure inclusion.  The
rank-drop step used by one bundled chain gets its own exact witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Optional

from .poly import Polynomial, RationalField
from .simplex import SimplexContext, SupportSet

_Q = RationalField()


@dataclass(frozen=True)
class Substitution:
    """Invertible linear coordinate change, as an exact rational matrix.

    Row j lists the coefficients of the linear form substituted for
    variable j:  x_j  ->  sum_k matrix[j][k] * x_k.
    """

    matrix: tuple
    description: str = ""

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        nv = len(rows)
        if any(len(row) != nv for row in rows):
            raise ValueError("substitution matrix must be square")
        if _det(rows) == 0:
            raise ValueError("substitution matrix is singular")

    @classmethod
    def identity(cls, nv, description="identity"):
        return cls(tuple(tuple(int(j == k) for k in range(nv))
                         for j in range(nv)), description)

    @classmethod
    def permutation(cls, perm, description=""):
        """The change sending variable k to variable perm[k]."""
        nv = len(perm)
        return cls(tuple(tuple(int(perm[j] == k) for k in range(nv))
                         for j in range(nv)),
                   description or "permutation %s" % (tuple(perm),))

    def compose(self, inner: "Substitution") -> "Substitution":
        """self after inner: applying the result equals applying inner, then
        self, on polynomials."""
        a, b = inner.matrix, self.matrix
        nv = len(a)
        rows = tuple(tuple(sum(a[j][i] * b[i][k] for i in range(nv))
                           for k in range(nv)) for j in range(nv))
        return Substitution(rows, "%s . %s" % (self.description,
                                               inner.description))


def _det(rows):
    nv = len(rows)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(nv):
        piv = next((i for i in range(c, nv) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, nv):
            f = m[i][c] * inv
            if f:
                for j in range(c, nv):
                    m[i][j] -= f * m[c][j]
    return det


def apply_to_monomial(ctx: SimplexContext, m, sub: Substitution) -> Polynomial:
    """Exact expansion of the transformed monomial prod x_j^{e_j}."""
    out = Polynomial(ctx.nvars, _Q, {(0,) * ctx.nvars: 1})
    for j, e in enumerate(m):
        if e:
            lin = Polynomial(ctx.nvars, _Q,
                             {tuple(int(k == i) for k in range(ctx.nvars)): c
                              for i, c in enumerate(sub.matrix[j]) if c})
            for _ in range(e):
                out = out * lin
    return out


def support_image(ctx: SimplexContext, J: SupportSet,
                  sub: Substitution) -> SupportSet:
    """Union of the supports of the transformed monomials of J.

    Cancellation-immune: images of distinct source monomials are unioned
    formally, matching the generic-coefficient semantics of a family.
    """
    if len(sub.matrix) != ctx.nvars:
        raise ValueError("substitution has wrong dimension")
    mask = 0
    for i in J.indices():
        img = apply_to_monomial(ctx, ctx.monomials[i], sub)
        for m in img.terms:
            mask |= 1 << ctx.index[m]
    return SupportSet(mask, ctx.size)


def permutation_inclusion_search(ctx: SimplexContext, jk: SupportSet,
                                 jl: SupportSet) -> Optional[tuple]:
    """A coordinate permutation with perm(jk) contained in jl, or None.

    Exhaustive over all (n+1)! permutations.  None is only a necessary
    condition screen: it does not rule out inclusion under the full linear
    group.
    """
    if jk.size != jl.size:
        raise ValueError("supports from different contexts")
    src = [ctx.monomials[i] for i in jk.indices()]
    target = jl.mask
    index = ctx.index
    nv = ctx.nvars
    for perm in permutations(range(nv)):
        for m in src:
            img = [0] * nv
            for k in range(nv):
                img[perm[k]] = m[k]
            if not target >> index[tuple(img)] & 1:
                break
        else:
            return perm
    return None


def antichain_screen(ctx: SimplexContext, atlas, keep) -> list:
    """Permutation-level inclusions among the kept families.

    Returns a list of (k, l, permutation) hits for ordered pairs of distinct
    ids in keep; an empty list is the machine-checkable necessary condition
    for the retained set being an antichain modulo coordinate changes.
    """
    hits = []
    for k in keep:
        for l in keep:
            if k == l:
                continue
            perm = permutation_inclusion_search(
                ctx, atlas[k].support, atlas[l].support)
            if perm is not None:
                hits.append((k, l, perm))
    return hits


@dataclass(frozen=True)
class ChainStep:
    """One certified move of an inclusion chain.

    kind 'enlarge':    current support must be contained in `expected`
                       (adding monomials is free for generic families);
    kind 'shrink':     `expected` must be contained in the current support
                       (specializing coefficients to zero);
    kind 'substitute': support_image of the current support under `sub`
                       must be contained in `expected`;
    kind 'rank-drop':  shrink justified by a pencil-of-quadrics rank drop,
                       checked by verify_rank_drop with the step's data.
    """

    kind: str
    expected: SupportSet
    sub: Optional[Substitution] = None
    quad_vars: tuple = ()
    pencil: tuple = ()


@dataclass(frozen=True)
class InclusionChain:
    source: int          # atlas family id, 0-based
    target: int
    steps: tuple
    description: str = ""


class ChainError(ValueError):
    pass


def verify_chain(ctx: SimplexContext, chain: InclusionChain, atlas) -> bool:
    """Check every step of an inclusion chain, ending inside the target.

    Raises ChainError on malformed chains; returns False when a step's
    certificate fails, True when the whole chain verifies.
    """
    if not (0 <= chain.source < len(atlas) and 0 <= chain.target < len(atlas)):
        raise ChainError("family id out of range")
    current = atlas[chain.source].support
    for step in chain.steps:
        if step.kind == "enlarge":
            if not current.issubset(step.expected):
                return False
        elif step.kind == "shrink":
            if not step.expected.issubset(current):
                return False
        elif step.kind == "substitute":
            if step.sub is None:
                raise ChainError("substitute step without a matrix")
            if not support_image(ctx, current, step.sub).issubset(step.expected):
                return False
        elif step.kind == "rank-drop":
            if not verify_rank_drop(ctx, current, step.expected,
                                    step.quad_vars, step.pencil):
                return False
        else:
            raise ChainError("unknown step kind %r" % step.kind)
        current = step.expected
    return current.issubset(atlas[chain.target].support)


def _quadric_monomials(ctx, qvars, extra):
    """Degree-d monomials that are quadratic in qvars times the extra var."""
    out = []
    for pair in combinations_with_replacement(qvars, ctx.d - 1):
        e = [0] * ctx.nvars
        for k in pair:
            e[k] += 1
        e[extra] += 1
        out.append(tuple(e))
    return out


def verify_rank_drop(ctx: SimplexContext, current: SupportSet,
                     expected: SupportSet, quad_vars, pencil) -> bool:
    """Certificate for a shrink via a pencil of quadrics dropping rank.

    The current support restricted to (quadric in quad_vars) * pencil-variable
    is a pencil q_a * x_a + q_b * x_b of quadrics in the three quad_vars.  The
    step is sound because some member of a generic pencil has rank <= 2 and a
    linear change in quad_vars rewrites it in two of them.  Checks performed:

    1. the removed monomials are exactly quadrics in quad_vars times x_b that
       involve the last quad var, and the full pencil lies in `current`;
    2. the substitution x_a -> x_a + t*x_b maps the pencil support onto
       itself (so the parameter shift below stays inside the family);
    3. an exact rational witness: an explicit pencil with both distinguished
       generators of rank 3 whose member at a rational parameter has rank 2.
    """
    if len(quad_vars) != 3 or len(pencil) != 2:
        raise ChainError("rank-drop needs 3 quadric variables and a pencil pair")
    a, b = pencil
    if not expected.issubset(current):
        return False
    removed = current - expected
    drop_var = quad_vars[2]
    for i in removed.indices():
        m = ctx.monomials[i]
        if m[b] != 1 or m[drop_var] == 0:
            return False
        if sum(m[k] for k in quad_vars) != 2 or sum(m) != ctx.d:
            return False
    pencil_mons = (_quadric_monomials(ctx, quad_vars, a)
                   + _quadric_monomials(ctx, quad_vars, b))
    if not ctx.support(pencil_mons).issubset(current):
        return False

    # shift x_a -> x_a + t x_b keeps the pencil support inside itself
    t = Fraction(1, 3)
    rows = [[Fraction(int(j == k)) for k in range(ctx.nvars)]
            for j in range(ctx.nvars)]
    rows[a][b] = t
    shift = Substitution(tuple(tuple(r) for r in rows), "pencil shift")
    psupp = ctx.support(pencil_mons)
    if not support_image(ctx, psupp, shift).issubset(psupp):
        return False

    # exact witness: q_a of rank 3, q_b = R + t0 q_a with R of rank 2, so the
    # member q_b - t0 q_a has rank exactly 2 at the rational parameter t0
    t0 = Fraction(2, 5)
    qa = ((2, 1, 0), (1, 3, 1), (0, 1, 2))
    R = ((1, 1, 0), (1, 1, 0), (0, 0, 1))   # rank 2
    qb = tuple(tuple(R[i][j] + t0 * qa[i][j] for j in range(3))
               for i in range(3))
    member = tuple(tuple(qb[i][j] - t0 * qa[i][j] for j in range(3))
                   for i in range(3))
    return (_rank3(qa) == 3 and _rank3(qb) == 3 and _rank3(member) == 2)


def _rank3(m):
    rows = [list(map(Fraction, r)) for r in m]
    rank = 0
    for c in range(3):
        piv = next((i for i in range(rank, 3) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][c]
        for i in range(rank + 1, 3):
            f = rows[i][c] / lead
            for j in range(3):
                rows[i][j] -= f * rows[rank][j]
        rank += 1
    return rank
