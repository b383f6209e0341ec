"""Dimension and degree of the singular locus of a generic family member.

A family member is a form with support in a prescribed monomial set and
seeded pseudo-random nonzero coefficients.  Its singular scheme is cut out by
the partial derivatives (for degree coprime to the characteristic the form
itself is a redundant generator, by the Euler relation); dimension and degree
come from the Hilbert series of a Groebner basis of the Jacobian ideal.

Genericity is handled statistically: several independent draws must agree,
and disagreement triggers fresh draws.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .groebner import groebner_basis, normal_form
from .hilbert import HilbertData, hilbert_dim_deg
from .poly import Polynomial, PrimeField
from .simplex import SimplexContext, SupportSet

log = logging.getLogger(__name__)


class GenericityError(RuntimeError):
    """Repeated coefficient draws kept disagreeing on dimension/degree."""


def generic_member(ctx: SimplexContext, support: SupportSet, seed: int,
                   field=None) -> Polynomial:
    """Form with the given support and seeded nonzero random coefficients.

    Coefficients are drawn per monomial in canonical index order, so the form
    depends only on (support, seed, field).
    """
    if field is None:
        field = PrimeField()
    rng = random.Random(seed)
    # small integers for the rational audit mode: coefficient growth in
    # exact-rational reduction is the bottleneck, and small generic integers
    # serve the same purpose
    hi = field.p - 1 if isinstance(field, PrimeField) else 97
    terms = {}
    for i in support.indices():
        terms[ctx.monomials[i]] = rng.randint(1, hi)
    if not terms:
        raise ValueError("empty support")
    return Polynomial(ctx.nvars, field, terms)


def jacobian_generators(f: Polynomial) -> list:
    gens = [f.derivative(k) for k in range(f.nvars)]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("all partial derivatives vanish")
    return gens


def singular_scheme(f: Polynomial) -> HilbertData:
    """Projective dimension and degree of the scheme of the partials of f."""
    return hilbert_dim_deg(groebner_basis(jacobian_generators(f)))


def jacobian_scheme(ctx: SimplexContext, family, seed: int = 0,
                    field=None) -> HilbertData:
    """Hilbert data of the Jacobian scheme of one seeded generic member.

    ``family`` is a MaximalFamily or a bare SupportSet.
    """
    support = getattr(family, "support", family)
    return singular_scheme(generic_member(ctx, support, seed, field))


def singular_dim_deg(ctx: SimplexContext, support: SupportSet, seed: int = 0,
                     field=None, draws: int = 3,
                     max_redraws: int = 5) -> HilbertData:
    """Dimension/degree of the singular locus of a generic member.

    Computes ``draws`` independent seeded members; all must agree.  A draw
    disagreeing with the majority is replaced by a fresh one (a random
    coefficient vector can be non-generic); persistent disagreement raises
    GenericityError.
    """
    results = {}
    offsets = list(range(draws))
    next_offset = draws
    redraws = 0
    while True:
        for off in offsets:
            if off not in results:
                member = generic_member(ctx, support, _mix(seed, off), field)
                results[off] = singular_scheme(member)
        values = [(r.dimension, r.degree) for r in results.values()]
        distinct = set(values)
        if len(distinct) == 1:
            return next(iter(results.values()))
        majority = max(distinct, key=values.count)
        log.warning("draw disagreement for seed %d: %s", seed, distinct)
        if redraws >= max_redraws:
            raise GenericityError(
                "no consensus after %d redraws: %s" % (redraws, distinct))
        for off in list(results):
            if (results[off].dimension, results[off].degree) != majority:
                del results[off]
                offsets[offsets.index(off)] = next_offset
                next_offset += 1
                redraws += 1


def _mix(seed: int, offset: int) -> int:
    return seed if offset == 0 else seed * 1000003 + offset


def locus_equations(ctx: SimplexContext, support: SupportSet, f: Polynomial,
                    vanishing: int) -> list:
    """Generators of the expected singular-locus ideal of f.

    The locus lives where the first ``vanishing`` coordinates are zero; on
    that linear space the partial derivative by each vanishing coordinate
    restricts to a quadric in the remaining variables, read straight off the
    coefficients of f.  Returns the coordinate forms followed by the nonzero
    quadrics.
    """
    nv = ctx.nvars
    if not 0 < vanishing < nv:
        raise ValueError("vanishing count out of range")
    gens = [Polynomial.variable(k, nv, f.field) for k in range(vanishing)]
    for j in range(vanishing):
        q = {}
        for m, c in f.terms.items():
            if m[j] >= 1 and all(m[k] - (k == j) == 0 for k in range(vanishing)):
                rest = tuple(0 if k == j else e for k, e in enumerate(m))
                q[rest] = f.field.mul(c, f.field.coerce(m[j]))
        if q:
            gens.append(Polynomial(nv, f.field, q))
    return gens


def verify_locus_equations(ctx: SimplexContext, support: SupportSet,
                           vanishing: int, seed: int = 0,
                           field=None) -> bool:
    """Check the Jacobian ideal of a generic member lies in the expected
    locus ideal, i.e. the described locus is contained in the singular locus.

    Certified by Groebner normal forms: every partial derivative must reduce
    to zero modulo the locus ideal.
    """
    f = generic_member(ctx, support, seed, field)
    gens = locus_equations(ctx, support, f, vanishing)
    gb = groebner_basis(gens)
    return all(normal_form(df, gb.generators).is_zero()
               for df in jacobian_generators(f))


@dataclass(frozen=True)
class SingularReport:
    vector: tuple
    dimension: int
    degree: int
