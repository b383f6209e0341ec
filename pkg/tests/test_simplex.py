import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cubicstab.simplex import (SimplexContext, SupportSet, build_simplex,
                               check_weight_vector, halfspace_support,
                               is_monotone, pairing, permute_support,
                               reduce_vector)


def test_context_size_and_order():
    ctx = build_simplex(6, 3)
    assert ctx.size == math.comb(9, 3) == 84
    # descending lexicographic on exponent tuples
    assert ctx.monomials[0] == (3, 0, 0, 0, 0, 0, 0)
    assert ctx.monomials[-1] == (0, 0, 0, 0, 0, 0, 3)
    assert all(a > b for a, b in zip(ctx.monomials, ctx.monomials[1:]))
    assert ctx.barycenter == (Fraction(3, 7),) * 7


def test_context_rejects_bad_input():
    with pytest.raises(ValueError):
        SimplexContext(0, 3)
    with pytest.raises(ValueError):
        SimplexContext(2, 0)


def test_support_set_ops():
    ctx = build_simplex(2, 2)
    a = SupportSet.from_indices([0, 2, 4], ctx.size)
    b = SupportSet.from_indices([0, 4], ctx.size)
    assert b.issubset(a) and not a.issubset(b)
    assert len(a | b) == 3 and len(a & b) == 2 and len(a - b) == 1
    assert 2 in a and 2 not in b
    with pytest.raises(ValueError):
        SupportSet.from_indices([ctx.size], ctx.size)
    with pytest.raises(ValueError):
        SupportSet(1 << ctx.size, ctx.size)


def test_weight_vector_checks():
    with pytest.raises(ValueError):
        check_weight_vector((1, 1, -1))
    with pytest.raises(ValueError):
        check_weight_vector((0, 0, 0))
    assert check_weight_vector((2, -1, -1)) == (2, -1, -1)


def test_reduce_vector():
    assert reduce_vector((4, -2, -2)) == (2, -1, -1)
    assert reduce_vector((-2, 1, 1)) == (2, -1, -1)
    # ascending input flips to descending under the enumeration convention
    assert reduce_vector((-2, 0, 2), orient="descending") == (2, 0, -2) or \
        reduce_vector((-2, 0, 2), orient="descending") == (1, 0, -1)
    assert reduce_vector((-1, 0, 1), orient="descending") == (1, 0, -1)


def test_is_monotone():
    assert is_monotone((3, 1, 0, -4)) == "descending"
    assert is_monotone((-1, 0, 0, 1)) == "ascending"
    assert is_monotone((1, -2, 1)) == ""


def test_halfspace_support_matches_pairing():
    ctx = build_simplex(6, 3)
    r = (8, 3, 2, -1, -2, -4, -6)
    s = halfspace_support(ctx, r)
    for i, m in enumerate(ctx.monomials):
        assert (i in s) == (pairing(r, m) >= 0)
    strict = halfspace_support(ctx, r, strict=True)
    assert strict.issubset(s)
    for i, m in enumerate(ctx.monomials):
        assert (i in strict) == (pairing(r, m) > 0)


def test_permute_support_roundtrip():
    ctx = build_simplex(3, 2)
    s = halfspace_support(ctx, (2, 1, -1, -2))
    perm = (1, 3, 0, 2)
    inv = [0] * 4
    for k, p in enumerate(perm):
        inv[p] = k
    assert permute_support(ctx, permute_support(ctx, s, perm), inv).mask == s.mask


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=7))
def test_reduce_vector_idempotent(entries):
    entries = entries[:-1] + [-sum(entries[:-1])]
    if not any(entries):
        return
    red = reduce_vector(tuple(entries))
    assert reduce_vector(red) == red
    assert math.gcd(*(abs(x) for x in red)) == 1
