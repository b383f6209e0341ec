"""Buchberger's algorithm in degree-reverse-lexicographic order.

Pair selection uses the sugar strategy; useless pairs are dropped by the
coprime-leading-term criterion and the chain criterion.  Reduction runs on a
heap-plus-accumulator representation so tails merge without resorting.  The
returned basis is fully reduced and sorted by decreasing leading monomial,
hence unique for the ideal and the order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .poly import Polynomial, grevlex_key


def _heap_entry(m):
    # min-heap entry whose minimum is the degrevlex-largest monomial:
    # reversing the exponents flips the tie-break the right way around
    return (-sum(m), tuple(reversed(m)))


def _entry_monomial(entry):
    return tuple(reversed(entry[1]))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _reduce_terms(terms, basis, fld):
    """Full normal form of a term dict modulo monic (lt, tail) pairs."""
    zero = fld.zero
    sub, mul = fld.sub, fld.mul
    acc = dict(terms)
    heap = [_heap_entry(m) for m in acc]
    heapq.heapify(heap)
    out = {}
    while heap:
        m = _entry_monomial(heapq.heappop(heap))
        c = acc.pop(m, zero)
        if c == zero:
            continue
        for lt, tail in basis:
            if _divides(lt, m):
                shift = _sub(m, lt)
                for tm, tc in tail:
                    nm = tuple(a + b for a, b in zip(tm, shift))
                    prev = acc.get(nm)
                    if prev is None:
                        nc = sub(zero, mul(c, tc))
                        if nc != zero:
                            acc[nm] = nc
                            heapq.heappush(heap, _heap_entry(nm))
                    else:
                        nc = sub(prev, mul(c, tc))
                        if nc != zero:
                            acc[nm] = nc
                        else:
                            del acc[nm]
                break
        else:
            out[m] = c
    return out


def _prepare(p: Polynomial):
    """(leading monomial, tail terms) of the monic multiple of p."""
    p = p.monic()
    lt = p.leading_monomial()
    tail = [(m, c) for m, c in p.terms.items() if m != lt]
    return lt, tail


def normal_form(p: Polynomial, basis) -> Polynomial:
    """Remainder of p on division by a list of polynomials."""
    pre = [_prepare(g) for g in basis if not g.is_zero()]
    pre.sort(key=lambda e: grevlex_key(e[0]))
    return Polynomial(p.nvars, p.field, _reduce_terms(p.terms, pre, p.field))


@dataclass
class GroebnerBasis:
    generators: list
    field: object
    order: str = "degrevlex"
    reduced: bool = True
    spairs_reduced: int = field(default=0)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.generators]

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.generators)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()


def _spoly_terms(gi, gj, fld):
    """S-polynomial of two monic prepared generators, as a term dict."""
    lti, taili = gi
    ltj, tailj = gj
    lcm = _lcm(lti, ltj)
    si, sj = _sub(lcm, lti), _sub(lcm, ltj)
    sub, zero = fld.sub, fld.zero
    out = {}
    for m, c in taili:
        nm = tuple(a + b for a, b in zip(m, si))
        out[nm] = c
    for m, c in tailj:
        nm = tuple(a + b for a, b in zip(m, sj))
        nc = sub(out.get(nm, zero), c)
        if nc != zero:
            out[nm] = nc
        else:
            out.pop(nm, None)
    return out


def groebner_basis(gens) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    All generators must share one ring.  The zero ideal gives an empty basis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    nvars, fld = gens[0].nvars, gens[0].field
    for g in gens:
        if g.nvars != nvars or g.field != fld:
            raise ValueError("generators over different rings")

    G = []          # prepared (lt, tail) pairs, all monic
    sugars = []     # sugar degree of each basis element
    pairs = []      # heap of (sugar, lcm key, i, j)
    done = set()    # processed or discarded index pairs

    def add_pairs(t):
        ltt, _ = G[t]
        for i in range(t):
            lti, _ = G[i]
            lcm = _lcm(lti, ltt)
            s = max(sugars[i] + sum(_sub(lcm, lti)),
                    sugars[t] + sum(_sub(lcm, ltt)))
            heapq.heappush(pairs, (s, grevlex_key(lcm), i, t))

    for g in gens:
        G.append(_prepare(g))
        sugars.append(g.total_degree())
        add_pairs(len(G) - 1)

    reductions = 0
    while pairs:
        sugar, _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        lti, ltj = G[i][0], G[j][0]
        lcm = _lcm(lti, ltj)
        if tuple(a + b for a, b in zip(lti, ltj)) == lcm:
            continue  # coprime leading terms: S-pair reduces to zero
        chained = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if (_divides(G[k][0], lcm)
                    and (min(i, k), max(i, k)) in done
                    and (min(j, k), max(j, k)) in done):
                chained = True
                break
        if chained:
            continue
        rem = _reduce_terms(_spoly_terms(G[i], G[j], fld), G, fld)
        reductions += 1
        if not rem:
            continue
        p = Polynomial(nvars, fld, rem)
        G.append(_prepare(p))
        sugars.append(max(sugar, p.total_degree()))
        add_pairs(len(G) - 1)

    # minimalize: drop generators whose lt is divisible by another lt
    keep = []
    for i, (lt, _) in enumerate(G):
        if not any(j != i and _divides(G[j][0], lt)
                   and (grevlex_key(G[j][0]) != grevlex_key(lt) or j < i)
                   for j in range(len(G))):
            keep.append(i)
    # interreduce the tails
    final = []
    kept = [G[i] for i in keep]
    for pos, (lt, tail) in enumerate(kept):
        others = kept[:pos] + kept[pos + 1:]
        red = _reduce_terms(dict(tail), others, fld)
        red[lt] = fld.one
        final.append(Polynomial(nvars, fld, red))
    final.sort(key=lambda p: grevlex_key(p.leading_monomial()), reverse=True)
    return GroebnerBasis(final, fld, spairs_reduced=reductions)
