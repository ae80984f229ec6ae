import numpy as np
import pytest

from conftest import matrix_algebra, truncated_polynomial_algebra, upper_triangular2
from distab import gflinalg as gf
from distab.algebras import (
    AlgebraError,
    AssociativityViolation,
    UnitViolation,
    center,
    commutator_subspace,
    group_algebra,
    new_algebra,
    opposite,
    quantum_complete_intersection,
    quotient_algebra,
)
from distab.gflinalg import Subspace
from distab.groups import cyclic, dihedral, direct_product, symmetric3
from distab.ideals import annihilator_of_element, ideal_generated


def test_field_as_algebra():
    a = new_algebra(5, [[[1]]], [1])
    assert a.dim == 1
    assert a.multiply([2], [3]).tolist() == [1]  # 6 mod 5


def test_dual_numbers(dual_numbers):
    x = dual_numbers.basis_vector(1)
    assert not dual_numbers.multiply(x, x).any()


def test_associativity_violation_detected():
    # e1*e1 = e2, e1*e2 = 1, e2*e1 = 0:
    # (e1 e1) e1 = e2 e1 = 0 but e1 (e1 e1) = e1 e2 = 1
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 0, 0] = 1
    c[0, 1, 1] = c[1, 0, 1] = 1
    c[0, 2, 2] = c[2, 0, 2] = 1
    c[1, 1, 2] = 1
    c[1, 2, 0] = 1
    with pytest.raises(AssociativityViolation):
        new_algebra(2, c, [1, 0, 0])


def test_unit_violation_detected():
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 0] = 1  # e0 e0 = e0 but e0 e1 = 0: e0 is not a unit
    with pytest.raises(UnitViolation):
        new_algebra(2, c, [1, 0])


def test_qci_dimensions_and_labels(qci49, qci9):
    assert qci49.dim == 49
    assert qci49.label(0) == "x^0*y^0"
    assert qci49.label(48) == "x^6*y^6"
    assert qci9.dim == 9


def test_qci_char2_is_klein_group_algebra_shape():
    a = quantum_complete_intersection(2, 1, 2, 2)
    assert a.dim == 4
    # commutative with x^2 = y^2 = 0
    assert np.array_equal(a.structure, a.structure.transpose(1, 0, 2))
    x, y = a.basis_vector(2), a.basis_vector(1)
    assert not a.multiply(x, x).any()
    assert not a.multiply(y, y).any()


def test_qci_rejects_bad_parameters():
    with pytest.raises(AlgebraError):
        quantum_complete_intersection(7, 0, 3, 3)
    with pytest.raises(AlgebraError):
        quantum_complete_intersection(7, -1, 1, 3)


def test_quotient_dual_numbers_by_nilpotents(dual_numbers):
    ideal = ideal_generated(dual_numbers, [dual_numbers.basis_vector(1)])
    q, proj = quotient_algebra(dual_numbers, ideal.space)
    assert q.dim == 1
    assert proj.apply(dual_numbers.unit).tolist() == [1]


def test_quotient_kc4_by_induced_is_kc2(c4, kc4):
    one = kc4.basis_vector(0)
    t2 = kc4.basis_vector(2)
    ideal = ideal_generated(kc4, [(t2 - one) % 2])
    assert ideal.dim == 2
    q, proj = quotient_algebra(kc4, ideal.space)
    assert q.dim == 2
    # the image of t generates and squares to the unit
    tbar = proj.apply(kc4.basis_vector(1))
    assert q.multiply(tbar, tbar).tolist() == q.unit.tolist()


def test_quotient_rejects_unit_ideal(dual_numbers):
    with pytest.raises(AlgebraError):
        quotient_algebra(dual_numbers, Subspace.full(2, 2))


def test_qci49_mod_ann_z_is_dim_9(qci49):
    z = qci49.basis_vector(4 * 7 + 4)
    ann = annihilator_of_element(qci49, z)
    assert ann.dim == 40
    q, _ = quotient_algebra(qci49, ann.space)
    assert q.dim == 9


def test_opposite_commutative_fixed(dual_numbers):
    assert np.array_equal(opposite(dual_numbers).structure, dual_numbers.structure)


def test_opposite_upper_triangular_and_involution():
    ut = upper_triangular2(2)
    op = opposite(ut)
    assert not np.array_equal(op.structure, ut.structure)
    assert np.array_equal(opposite(op).structure, ut.structure)


def test_opposite_involution_on_qci(qci9):
    assert np.array_equal(opposite(opposite(qci9)).structure, qci9.structure)


def test_center_commutative_full(dual_numbers):
    assert center(dual_numbers).dim == 2


def test_center_matrix_algebra_exhaustive_oracle():
    m2 = matrix_algebra(2, 2)
    # oracle: enumerate all 16 elements and keep those commuting with all
    # basis vectors
    central = [
        v
        for v in gf.all_vectors(4, 2)
        if all(
            np.array_equal(m2.multiply(v, m2.basis_vector(i)),
                           m2.multiply(m2.basis_vector(i), v))
            for i in range(4)
        )
    ]
    oracle = Subspace.from_rows(np.asarray(central), 4, 2)
    assert oracle.dim == 1
    assert center(m2) == oracle


def test_center_qci49_has_paper_basis(qci49):
    expected_rows = []
    for i in range(7):
        for j in range(7):
            if (i % 2 == 0 and j % 2 == 0) or i == 6 or j == 6:
                expected_rows.append(qci49.basis_vector(7 * i + j))
    expected = Subspace.from_rows(np.asarray(expected_rows), 49, 7)
    assert center(qci49) == expected


def test_commutator_space_values():
    assert commutator_subspace(truncated_polynomial_algebra(3, 3)).is_zero()
    assert commutator_subspace(matrix_algebra(3, 2)).dim == 3  # trace zero
    ks3 = group_algebra(symmetric3(), 2)
    # 6 - (number of conjugacy classes of S3) = 3
    assert commutator_subspace(ks3).dim == 3


def test_mult_operator_matrices(kc2, dual_numbers):
    assert np.array_equal(kc2.left_mult(kc2.unit), np.eye(2, dtype=int))
    x = dual_numbers.basis_vector(1)
    lx = dual_numbers.left_mult(x)
    assert gf.rref(lx, 2)[2] == 1
    assert not gf.matmul(lx, lx, 2).any()


def test_left_mult_z_rank_9(qci49):
    z = qci49.basis_vector(4 * 7 + 4)
    assert gf.rref(qci49.left_mult(z), 7)[2] == 9


def test_group_algebra_values(kc2, kd10):
    triv = group_algebra(cyclic(1), 3)
    assert triv.dim == 1
    # kC2 over F2: t maps to 1 + x in the dual numbers; here just t^2 = 1
    t = kc2.basis_vector(1)
    assert kc2.multiply(t, t).tolist() == kc2.unit.tolist()
    assert kd10.dim == 10


def test_group_algebra_direct_product_dim():
    g = direct_product(cyclic(2), cyclic(3))
    assert group_algebra(g, 5).dim == 6


def test_quotient_dim_additivity(kc4):
    one = kc4.basis_vector(0)
    ideal = ideal_generated(kc4, [(kc4.basis_vector(2) - one) % 2])
    q, _ = quotient_algebra(kc4, ideal.space)
    assert q.dim + ideal.dim == kc4.dim


def test_center_is_a_subalgebra(kd10, qci9):
    for a in (kd10, qci9):
        z = center(a)
        prods = a.products_of_rows(z.basis, z.basis)
        for row in prods:
            assert z.contains_vector(row)
