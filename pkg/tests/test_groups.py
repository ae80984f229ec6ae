import numpy as np
import pytest

from distab.groups import (
    Group,
    GroupError,
    NotNormal,
    commutator_subgroup,
    cyclic,
    dihedral,
    direct_product,
    hom_to_fp_space,
    is_normal,
    o_p,
    p_rank_abelianization,
    quaternion8,
    quotient_group,
    subgroup,
    subgroup_as_group,
    subgroup_generated,
    symmetric3,
)


def test_cyclic_trivial():
    g = cyclic(1)
    assert g.order == 1 and g.identity == 0


def test_dihedral10_shape():
    g = dihedral(10)
    assert g.order == 10
    assert not g.is_abelian()
    # five rotations of order dividing 5, five reflections of order 2
    orders = sorted(g.element_order(a) for a in range(10))
    assert orders == [1, 2, 2, 2, 2, 2, 5, 5, 5, 5]


def test_direct_product_c2_c3_is_c6():
    g = direct_product(cyclic(2), cyclic(3))
    assert g.order == 6
    assert g.is_abelian()
    assert max(g.element_order(a) for a in range(6)) == 6


def test_table_validation_rejects_broken_tables():
    with pytest.raises(GroupError):
        Group(np.array([[0, 0], [0, 0]]), 0)  # not a Latin square
    # a genuine loop (Latin square with two-sided identity) that is not
    # associative, found by exhaustive search
    with pytest.raises(GroupError, match="associative"):
        Group(
            np.array([
                [0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 3, 4, 0, 1],
                [3, 4, 1, 2, 0],
                [4, 2, 0, 1, 3],
            ]),
            0,
        )


def test_quaternion_center_and_quotient():
    q8 = quaternion8()
    z = subgroup_generated(q8, [1])  # -1
    assert z.order == 2
    assert is_normal(z)
    q, index_map = quotient_group(q8, z)
    assert q.order == 4
    assert q.is_abelian()
    assert all(q.element_order(a) in (1, 2) for a in range(4))  # Klein four
    assert index_map[q8.identity] == q.identity


def test_s3_normality():
    s3 = symmetric3()
    rotations = subgroup(s3, [0, 1, 2])
    assert is_normal(rotations)
    q, _ = quotient_group(s3, rotations)
    assert q.order == 2
    flip = subgroup_generated(s3, [3])
    assert flip.order == 2
    assert not is_normal(flip)
    with pytest.raises(NotNormal):
        quotient_group(s3, flip)


def test_commutator_subgroup_s3():
    s3 = symmetric3()
    comm = commutator_subgroup(s3)
    assert sorted(comm.members) == [0, 1, 2]  # A_3


def test_o_p_examples():
    s3 = symmetric3()
    # transpositions are 3'-elements and generate S3
    assert o_p(s3, 3).order == 6
    # 3-cycles are 2'-elements and generate A_3
    assert o_p(s3, 2).order == 3
    c2 = cyclic(2)
    assert o_p(c2, 2).order == 1


def test_p_rank_values():
    assert p_rank_abelianization(cyclic(2), 2) == 1
    assert p_rank_abelianization(cyclic(4), 2) == 1
    assert p_rank_abelianization(direct_product(cyclic(2), cyclic(2)), 2) == 2
    assert p_rank_abelianization(symmetric3(), 2) == 1
    assert p_rank_abelianization(symmetric3(), 3) == 0
    assert p_rank_abelianization(quaternion8(), 2) == 2


def test_commutators_inside_every_hom_kernel():
    for g, p in [(symmetric3(), 2), (quaternion8(), 2), (dihedral(10), 5)]:
        homs = hom_to_fp_space(g, p)
        for row in homs.basis:
            for m in commutator_subgroup(g).members:
                assert row[m] % p == 0


def test_subgroup_as_group_roundtrip():
    s3 = symmetric3()
    rot = subgroup(s3, [0, 1, 2])
    g = subgroup_as_group(rot)
    assert g.order == 3
    assert max(g.element_order(a) for a in range(3)) == 3


def test_subgroup_validation():
    c4 = cyclic(4)
    with pytest.raises(GroupError):
        subgroup(c4, [0, 1])  # not closed
    assert subgroup(c4, [0, 2]).order == 2
