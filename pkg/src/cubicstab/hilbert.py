"""Hilbert series of a homogeneous quotient, from a Groebner basis.

The graded quotient by an ideal and by its leading-term ideal have the same
Hilbert function, so everything reduces to a monomial ideal.  The numerator
g(t) of the series g(t)/(1-t)^nvars is computed by the pivot recursion

    g(I) = g(I + (x_j)) + t * g(I : x_j)

with base cases: unit ideal -> 0, pairwise coprime pure powers -> product of
(1 - t^a).  Stripping the (1-t) factors from g gives the Krull dimension and
the degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class HilbertData:
    """Projective dimension and degree of a homogeneous quotient.

    dimension is dim of the projective scheme: -1 for the empty scheme (the
    quotient is zero or supported at the irrelevant maximal ideal only).
    degree is 0 when the scheme is empty.
    """

    dimension: int
    degree: int
    numerator: tuple = ()   # coefficients of the reduced numerator h(t)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _poly_shift(a, k):
    return (0,) * k + tuple(a)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _strip_one_minus_t(a):
    """Divide by (1 - t); requires exact divisibility (a(1) == 0)."""
    out = []
    carry = 0
    for c in a[:-1]:
        carry += c
        out.append(carry)
    assert carry + a[-1] == 0, "polynomial not divisible by 1 - t"
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _minimalize(gens):
    """Drop monomial generators divisible by another; dedup; sort."""
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return tuple(out)


def _components(gens):
    """Partition generators into variable-disjoint groups."""
    groups = []
    for g in gens:
        vars_g = {k for k, e in enumerate(g) if e}
        merged = [g]
        rest = []
        for vs, gs in groups:
            if vs & vars_g:
                vars_g |= vs
                merged.extend(gs)
            else:
                rest.append((vs, gs))
        groups = rest + [(vars_g, merged)]
    return [gs for _, gs in groups]


@lru_cache(maxsize=200000)
def _numerator(gens):
    """Numerator of Hilb(R/I) over (1-t)^nvars for minimal generators."""
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    if all(sum(1 for e in g if e) == 1 for g in gens):
        # pairwise coprime pure powers after minimalization
        num = (1,)
        for g in gens:
            num = _poly_mul(num, (1,) + (0,) * (sum(g) - 1) + (-1,))
        return num
    comps = _components(gens)
    if len(comps) > 1:
        num = (1,)
        for comp in comps:
            num = _poly_mul(num, _numerator(_minimalize(comp)))
        return num
    # pivot on the most shared variable among mixed generators
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        if sum(1 for e in g if e) > 1:
            for k, e in enumerate(g):
                if e:
                    counts[k] += 1
    j = counts.index(max(counts))
    ej = tuple(1 if k == j else 0 for k in range(nvars))
    plus = _minimalize(gens + (ej,))
    colon = _minimalize(tuple(
        tuple(e - 1 if k == j and e else e for k, e in enumerate(g))
        for g in gens))
    return _poly_add(_numerator(plus), _poly_shift(_numerator(colon), 1))


def monomial_numerator(leading_monomials) -> tuple:
    """Numerator of the Hilbert series of R/(monomial ideal)."""
    return _numerator(_minimalize(tuple(tuple(m) for m in leading_monomials)))


def hilbert_dim_deg(gb) -> HilbertData:
    """Projective dimension and degree from a Groebner basis.

    Accepts a GroebnerBasis (its leading monomials are used) or a bare list
    of exponent tuples generating a monomial ideal.
    """
    if hasattr(gb, "leading_monomials"):
        for g in gb.generators:
            if not g.is_homogeneous():
                raise ValueError("ideal is not homogeneous")
        lts = gb.leading_monomials()
    else:
        lts = [tuple(m) for m in gb]
    if not lts:
        raise ValueError("empty generating set (the zero ideal has the whole "
                         "space as its scheme)")
    nvars = len(lts[0])
    num = monomial_numerator(lts)
    if num == (0,):
        return HilbertData(-1, 0, (0,))
    # series = raw_num / (1-t)^nvars = num / (1-t)^(nvars - strips); the pole
    # order nvars - strips is the Krull dimension of the quotient
    strips = 0
    while sum(num) == 0:
        num = _strip_one_minus_t(num)
        strips += 1
    krull = nvars - strips
    if krull == 0:
        return HilbertData(-1, 0, num)
    return HilbertData(krull - 1, sum(num), num)
