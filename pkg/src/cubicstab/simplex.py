"""Lattice combinatorics of the degree-d simplex.

The simplex is the set of exponent vectors of degree-d monomials in n+1
variables.  A diagonal one-parameter subgroup is an integer weight vector of
total weight 0; pairing it against the simplex cuts out halfspace supports,
the basic objects of the whole toolkit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

ExponentVector = tuple  # integer tuple of length n+1, entries >= 0, sum d
WeightVector = tuple    # integer tuple of length n+1, sum 0, not all zero


@dataclass(frozen=True)
class SupportSet:
    """Subset of the simplex, stored as a fixed-width bitmask.

    Bit i corresponds to index i in the context's canonical monomial order.
    Subset/equality tests are exact integer operations.
    """

    mask: int
    size: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.size:
            raise ValueError("mask out of range for context size %d" % self.size)

    @classmethod
    def from_indices(cls, indices, size: int) -> "SupportSet":
        mask = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError("monomial index %d out of range" % i)
            mask |= 1 << i
        return cls(mask, size)

    def indices(self) -> list:
        return [i for i in range(self.size) if self.mask >> i & 1]

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "SupportSet"):
        if self.size != other.size:
            raise ValueError("supports from different contexts")

    def issubset(self, other: "SupportSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __or__(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(self.mask | other.mask, self.size)

    def __and__(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(self.mask & other.mask, self.size)

    def __sub__(self, other: "SupportSet") -> "SupportSet":
        self._check(other)
        return SupportSet(self.mask & ~other.mask, self.size)


class SimplexContext:
    """The full simplex for (n, d), with the canonical monomial order.

    Monomials are sorted descending-lexicographically on exponent tuples, so
    support bitmasks and emitted tables are stable across platforms.  The
    barycenter is the rational point (d/(n+1), ..., d/(n+1)).
    """

    def __init__(self, n: int, d: int):
        if n < 1 or d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        self.n = n
        self.d = d
        self.nvars = n + 1
        self.monomials = tuple(sorted(
            _degree_tuples(n + 1, d), reverse=True))
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.barycenter = (Fraction(d, n + 1),) * (n + 1)
        # int64 matrix of exponents, one monomial per row (hot-loop pairings)
        self.exponents = np.array(self.monomials, dtype=np.int64)
        self.size = len(self.monomials)

    def __repr__(self):
        return "SimplexContext(n=%d, d=%d, %d monomials)" % (
            self.n, self.d, self.size)

    def __eq__(self, other):
        return (isinstance(other, SimplexContext)
                and (self.n, self.d) == (other.n, other.d))

    def __hash__(self):
        return hash((self.n, self.d))

    def support(self, monomials) -> SupportSet:
        """SupportSet from an iterable of exponent tuples."""
        return SupportSet.from_indices(
            (self.index[tuple(m)] for m in monomials), self.size)

    def full_support(self) -> SupportSet:
        return SupportSet((1 << self.size) - 1, self.size)

    def monomial_string(self, m) -> str:
        """Short x_k^e notation, e.g. 'x0^2*x3'."""
        parts = []
        for k, e in enumerate(m):
            if e == 1:
                parts.append("x%d" % k)
            elif e > 1:
                parts.append("x%d^%d" % (k, e))
        return "*".join(parts) if parts else "1"


def _degree_tuples(nvars: int, d: int):
    for bars in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for k in bars:
            exps[k] += 1
        yield tuple(exps)


@lru_cache(maxsize=None)
def build_simplex(n: int, d: int) -> SimplexContext:
    """The simplex of all degree-d exponent vectors in n+1 variables."""
    ctx = SimplexContext(n, d)
    assert ctx.size == math.comb(n + d, d)
    return ctx


def check_weight_vector(r, nvars: int = None) -> WeightVector:
    r = tuple(int(x) for x in r)
    if nvars is not None and len(r) != nvars:
        raise ValueError("weight vector has length %d, expected %d"
                         % (len(r), nvars))
    if sum(r) != 0:
        raise ValueError("weight vector %r has nonzero total weight" % (r,))
    if not any(r):
        raise ValueError("zero vector is not a one-parameter subgroup")
    return r


def reduce_vector(r, orient: str = "first-positive") -> WeightVector:
    """Divide a weight-0 integer vector by the gcd of its entries.

    orient='first-positive' flips the sign so the first nonzero entry is
    positive (the dedup convention); orient='descending' instead flips an
    ascending vector to descending, as the enumeration step demands, and
    leaves non-monotone vectors under the first-positive rule.
    """
    r = check_weight_vector(r)
    g = math.gcd(*(abs(x) for x in r))
    r = tuple(x // g for x in r)
    if orient == "descending" and is_monotone(r) == "ascending":
        return tuple(-x for x in r)
    first = next(x for x in r if x)
    if first < 0 and not (orient == "descending" and is_monotone(r)):
        r = tuple(-x for x in r)
    return r


def is_monotone(r) -> str:
    """'descending', 'ascending', or '' when neither."""
    if all(a >= b for a, b in zip(r, r[1:])):
        return "descending"
    if all(a <= b for a, b in zip(r, r[1:])):
        return "ascending"
    return ""


def pairing(r, m) -> int:
    return sum(a * b for a, b in zip(r, m))


def halfspace_support(ctx: SimplexContext, r, strict: bool = False) -> SupportSet:
    """Monomials pairing >= 0 (or > 0 when strict) with the weight vector r."""
    r = check_weight_vector(r, ctx.nvars)
    pair = ctx.exponents @ np.array(r, dtype=np.int64)
    hits = np.nonzero(pair > 0 if strict else pair >= 0)[0]
    mask = 0
    for i in hits.tolist():
        mask |= 1 << i
    return SupportSet(mask, ctx.size)


def permute_support(ctx: SimplexContext, s: SupportSet, perm) -> SupportSet:
    """Image of a support under a coordinate permutation.

    perm maps variable k to variable perm[k].
    """
    if s.size != ctx.size:
        raise ValueError("support does not match context")
    mask = 0
    for i in s.indices():
        m = ctx.monomials[i]
        img = [0] * ctx.nvars
        for k, e in enumerate(m):
            img[perm[k]] = e
        mask |= 1 << ctx.index[tuple(img)]
    return SupportSet(mask, ctx.size)
