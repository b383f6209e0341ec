import pytest

from cubicstab.poly import PrimeField, RationalField, euler_combination
from cubicstab.simplex import halfspace_support
from cubicstab.singular import (generic_member, jacobian_generators,
                                jacobian_scheme, locus_equations,
                                singular_dim_deg, singular_scheme,
                                verify_locus_equations)

R1 = (8, 3, 2, -1, -2, -4, -6)
R10 = (2, 2, 0, 0, -1, -1, -2)


def _fermat(ctx):
    return ctx.support([tuple(3 if i == k else 0 for i in range(7))
                        for k in range(7)])


def test_generic_member_deterministic(ctx6):
    s = halfspace_support(ctx6, R1)
    f = generic_member(ctx6, s, seed=5)
    g = generic_member(ctx6, s, seed=5)
    assert f == g
    assert set(f.terms) == {ctx6.monomials[i] for i in s.indices()}
    assert all(c != 0 for c in f.terms.values())
    assert generic_member(ctx6, s, seed=6) != f


def test_euler_identity_on_members(ctx6):
    s = halfspace_support(ctx6, R1)
    for field in (PrimeField(), RationalField()):
        f = generic_member(ctx6, s, seed=2, field=field)
        assert euler_combination(f) == f.scale(3)
        assert len(jacobian_generators(f)) == 7


def test_fermat_jacobian_empty(ctx6):
    hd = singular_scheme(generic_member(ctx6, _fermat(ctx6), seed=0))
    assert hd.dimension == -1


def test_paper_rows_sample(ctx6):
    assert (lambda h: (h.dimension, h.degree))(
        jacobian_scheme(ctx6, halfspace_support(ctx6, R1), seed=0)) == (1, 2)
    hd = singular_dim_deg(ctx6, halfspace_support(ctx6, R10), seed=0)
    assert (hd.dimension, hd.degree) == (0, 23)


def test_rational_field_agreement(ctx6):
    """Prime-field results audited over exact rationals (slow; one family)."""
    s = halfspace_support(ctx6, R1)
    hp = singular_dim_deg(ctx6, s, seed=0, draws=1)
    hq = singular_dim_deg(ctx6, s, seed=0, field=RationalField(), draws=1)
    assert (hp.dimension, hp.degree) == (hq.dimension, hq.degree) == (1, 2)


def test_locus_equations_shape(ctx6):
    s = halfspace_support(ctx6, R1)
    f = generic_member(ctx6, s, seed=0)
    gens = locus_equations(ctx6, s, f, vanishing=4)
    # 4 coordinates plus at least one read-back quadric
    assert len(gens) > 4
    for g in gens[:4]:
        assert g.total_degree() == 1
    for g in gens[4:]:
        assert g.total_degree() == 2


def test_locus_equations_bad_count(ctx6):
    s = halfspace_support(ctx6, R1)
    f = generic_member(ctx6, s, seed=0)
    with pytest.raises(ValueError):
        locus_equations(ctx6, s, f, vanishing=0)
    with pytest.raises(ValueError):
        locus_equations(ctx6, s, f, vanishing=7)


def test_verify_locus_sample_rows(ctx6, tables):
    counts = tables["equations_table"]["vanishing_counts"]
    for fid in (1, 5, 9):
        vec = tuple(tables["families"][fid - 1])
        s = halfspace_support(ctx6, vec)
        assert verify_locus_equations(ctx6, s, counts[fid - 1], seed=0)
    assert not verify_locus_equations(ctx6, _fermat(ctx6), 6, seed=0)
