import numpy as np
import pytest

from distab.algebras import group_algebra, new_algebra, quantum_complete_intersection
from distab.groups import cyclic, dihedral, direct_product, quaternion8, symmetric3


def truncated_polynomial_algebra(p, n):
    """F_p[x]/(x^n)."""
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                c[i, j, i + j] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    top = np.zeros(n, dtype=np.int64)
    top[n - 1] = 1
    return new_algebra(p, c, unit, [f"x^{i}" for i in range(n)], form_candidates=[top])


def matrix_algebra(p, n):
    """M_n(F_p) on the basis E_11, E_12, ..., E_nn (row-major)."""
    d = n * n

    def idx(i, j):
        return i * n + j

    c = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        c[idx(i, j), idx(k, l), idx(i, l)] = 1
    unit = np.zeros(d, dtype=np.int64)
    for i in range(n):
        unit[idx(i, i)] = 1
    labels = [f"E{i+1}{j+1}" for i in range(n) for j in range(n)]
    return new_algebra(p, c, unit, labels)


def upper_triangular2(p):
    """Upper triangular 2x2 matrices over F_p: basis E11, E12, E22."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 0, 0] = 1  # E11 E11
    c[0, 1, 1] = 1  # E11 E12
    c[1, 2, 1] = 1  # E12 E22
    c[2, 2, 2] = 1  # E22 E22
    return new_algebra(p, c, [1, 0, 1], ["E11", "E12", "E22"])


def uniserial2_kd10(kd10, top_trivial=True):
    """A uniserial length-2 module over kD10/F5. With top_trivial the
    composition series is trivial-over-sign; otherwise sign-over-trivial."""
    r_mat = np.array([[1, 1], [0, 1]])
    s_mat = np.array([[-1, 0], [0, 1]]) if top_trivial else np.array([[1, 0], [0, -1]])
    mats = []
    for idx in range(10):
        e, k = divmod(idx, 5)
        m = np.linalg.matrix_power(r_mat, k) % 5
        if e:
            m = (s_mat @ m) % 5
        mats.append(m % 5)
    from distab.modules import AModule

    return AModule(kd10, 2, np.asarray(mats))


@pytest.fixture(scope="session")
def qci49():
    return quantum_complete_intersection(7, -1, 7, 7)


@pytest.fixture(scope="session")
def qci9():
    return quantum_complete_intersection(7, -1, 3, 3)


@pytest.fixture(scope="session")
def kd10():
    return group_algebra(dihedral(10), 5)


@pytest.fixture(scope="session")
def c4():
    return cyclic(4)


@pytest.fixture(scope="session")
def kc4(c4):
    return group_algebra(c4, 2)


@pytest.fixture(scope="session")
def kc2():
    return group_algebra(cyclic(2), 2)


@pytest.fixture(scope="session")
def klein_group():
    return direct_product(cyclic(2), cyclic(2))


@pytest.fixture(scope="session")
def klein(klein_group):
    return group_algebra(klein_group, 2)


@pytest.fixture(scope="session")
def dual_numbers():
    return truncated_polynomial_algebra(2, 2)


@pytest.fixture(scope="session")
def fx4():
    return truncated_polynomial_algebra(2, 4)
