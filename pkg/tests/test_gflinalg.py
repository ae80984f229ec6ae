import numpy as np
import pytest

from distab import gflinalg as gf
from distab.gflinalg import Subspace


def test_rref_identity():
    r, pivots, rank = gf.rref(np.eye(3, dtype=int), 5)
    assert np.array_equal(r, np.eye(3, dtype=int))
    assert pivots == [0, 1, 2]
    assert rank == 3


def test_rref_zero():
    r, pivots, rank = gf.rref(np.zeros((2, 4), dtype=int), 2)
    assert not r.any()
    assert pivots == [] and rank == 0


def test_rref_dependent_rows_mod5():
    # second row is 2x the first mod 5, so it eliminates to zero
    r, pivots, rank = gf.rref([[1, 2], [2, 4]], 5)
    assert r.tolist() == [[1, 2], [0, 0]]
    assert rank == 1


def test_rref_idempotent_and_unique():
    rng = np.random.default_rng(7)
    for _ in range(100):
        p = int(rng.choice([2, 3, 5]))
        m = rng.integers(0, p, size=(rng.integers(1, 6), rng.integers(1, 6)))
        r1, _, _ = gf.rref(m, p)
        r2, _, _ = gf.rref(r1, p)
        assert np.array_equal(r1, r2)


def test_kernel_identity_and_zero():
    assert gf.kernel_basis(np.eye(3, dtype=int), 3).shape == (0, 3)
    assert gf.kernel_basis(np.zeros((2, 3), dtype=int), 2).shape == (3, 3)


def test_kernel_line_f2():
    k = gf.kernel_basis([[1, 1]], 2)
    assert k.tolist() == [[1, 1]]


def test_solve_affine_identity():
    x, hom = gf.solve_affine(np.eye(3, dtype=int), [1, 2, 0], 3)
    assert x.tolist() == [1, 2, 0]
    assert hom.dim == 0


def test_solve_affine_inconsistent():
    assert gf.solve_affine(np.zeros((2, 2), dtype=int), [1, 0], 2) is None


def test_solve_affine_line_f2_against_enumeration():
    # oracle: enumerate all 4 vectors of F_2^2
    m = np.array([[1, 1]])
    solutions = {tuple(v) for v in gf.all_vectors(2, 2) if (m @ v) % 2 == [1]}
    got = gf.solve_affine(m, [1], 2)
    assert got is not None
    particular, kernel = got
    assert tuple(particular) in solutions
    reconstructed = {
        tuple((particular + c * kernel.basis[0]) % 2) for c in range(2)
    }
    assert reconstructed == solutions


def test_subspace_trivial_identities():
    u = Subspace.from_rows([[1, 0, 0], [0, 1, 0]], 3, 2)
    assert u.sum(u) == u
    assert u.intersect(u) == u
    assert u.contains(u)


def test_complementary_subspaces_f2_4():
    u = Subspace.from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], 4, 2)
    v = Subspace.from_rows([[0, 0, 1, 0], [0, 0, 0, 1]], 4, 2)
    assert u.sum(v) == Subspace.full(4, 2)
    assert u.intersect(v).is_zero()


def test_two_lines_f3_square_exhaustive():
    # oracle: exhaust the 9 vectors of F_3^2
    u = Subspace.from_rows([[1, 0]], 2, 3)
    v = Subspace.from_rows([[1, 1]], 2, 3)
    in_u = {tuple(w) for w in gf.all_vectors(2, 3) if u.contains_vector(w)}
    in_v = {tuple(w) for w in gf.all_vectors(2, 3) if v.contains_vector(w)}
    assert len(in_u & in_v) == 1  # only zero
    assert u.intersect(v).is_zero()
    assert u.sum(v) == Subspace.full(2, 3)


def test_rank_nullity_randomized():
    rng = np.random.default_rng(11)
    for _ in range(2000):
        p = int(rng.choice([2, 3, 5]))
        rows, cols = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        m = rng.integers(0, p, size=(rows, cols))
        _, _, rank = gf.rref(m, p)
        assert rank + gf.kernel_basis(m, p).shape[0] == cols


def test_modular_dimension_law_randomized():
    rng = np.random.default_rng(13)
    for _ in range(500):
        p = int(rng.choice([2, 3, 5]))
        n = int(rng.integers(1, 6))
        u = Subspace.from_rows(rng.integers(0, p, size=(rng.integers(0, 4), n)), n, p)
        v = Subspace.from_rows(rng.integers(0, p, size=(rng.integers(0, 4), n)), n, p)
        assert u.sum(v).dim + u.intersect(v).dim == u.dim + v.dim


def test_subspace_equality_is_canonical():
    a = Subspace.from_rows([[1, 1], [0, 1]], 2, 2)
    b = Subspace.from_rows([[0, 1], [1, 0]], 2, 2)
    assert a == b
    assert a.key() == b.key()


def test_coords_roundtrip():
    s = Subspace.from_rows([[1, 0, 1], [0, 1, 1]], 3, 2)
    v = np.array([1, 1, 0])
    c = s.coords(v)
    assert np.array_equal((c @ s.basis) % 2, v)
    with pytest.raises(gf.GFError):
        s.coords([0, 0, 1])


def test_matmul_large_float_path_exact():
    rng = np.random.default_rng(3)
    a = rng.integers(0, 5, size=(40, 50))
    b = rng.integers(0, 5, size=(50, 45))
    assert np.array_equal(gf.matmul(a, b, 5), (a @ b) % 5)
