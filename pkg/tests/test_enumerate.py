import pytest

from cubicstab.enumerate import (brute_force_oracle, enumerate_maximal,
                                 maximal_antichain, split_by_eta)
from cubicstab.simplex import build_simplex, halfspace_support, is_monotone


def _masks(fams):
    return {f.support.mask for f in fams}


def test_oracle_rejects_bad_bound():
    with pytest.raises(ValueError):
        brute_force_oracle(build_simplex(2, 3), 0)


def test_oracle_equivalence_n2():
    ctx = build_simplex(2, 3)
    fams = enumerate_maximal(ctx)
    oracle = brute_force_oracle(ctx, 6)
    assert _masks(fams) == _masks(oracle)
    # saturation: doubling the bound changes nothing
    assert _masks(oracle) == _masks(brute_force_oracle(ctx, 12))


def test_oracle_equivalence_n3():
    ctx = build_simplex(3, 3)
    fams = enumerate_maximal(ctx)
    oracle = brute_force_oracle(ctx, 8)
    assert _masks(fams) == _masks(oracle)
    assert _masks(oracle) == _masks(brute_force_oracle(ctx, 16))


def test_families_are_maximal_halfspaces():
    ctx = build_simplex(3, 3)
    fams = enumerate_maximal(ctx)
    masks = _masks(fams)
    for fam in fams:
        assert is_monotone(fam.vector) == "descending"
        for vec in fam.vectors:
            assert halfspace_support(ctx, vec).mask == fam.support.mask
        # antichain
        for other in fams:
            if other is not fam:
                assert not fam.support.issubset(other.support)
    # deterministic across worker counts
    again = enumerate_maximal(ctx, workers=2)
    assert [f.vector for f in again] == [f.vector for f in fams]
    assert _masks(again) == masks


def test_maximal_antichain():
    sup = {0b111: ["a"], 0b011: ["b"], 0b101: ["c"], 0b1000: ["d"]}
    kept = maximal_antichain(sup)
    assert set(kept) == {0b111, 0b1000}


def test_split_by_eta_small():
    ctx = build_simplex(2, 3)
    semi, unstable = split_by_eta(ctx, enumerate_maximal(ctx))
    for fam in semi:
        assert fam.eta_in_hull is True
    for fam in unstable:
        assert fam.eta_in_hull is False
    assert len(semi) + len(unstable) == len(enumerate_maximal(ctx))
