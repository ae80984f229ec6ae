"""Deterministic exact linear algebra over the prime field GF(p).

Matrices are 2-D numpy int64 arrays with entries reduced into [0, p).
Subspaces are kept in reduced row echelon form, so two subspaces are
equal exactly when their basis arrays are equal entry-wise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np


class GFError(ValueError):
    pass


def check_prime(p: int) -> int:
    p = int(p)
    if p < 2:
        raise GFError(f"modulus {p} is not prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise GFError(f"modulus {p} is not prime")
        d += 1
    return p


def inv_mod(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0 in GF(p)")
    return pow(a, p - 2, p)


def as_gf(a, p: int) -> np.ndarray:
    """Coerce to an int64 array with entries reduced mod p."""
    return np.asarray(np.asarray(a, dtype=np.int64) % p, dtype=np.int64)


def zeros(shape, p: int) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product mod p; routed through float64 BLAS when large.

    Safe because all intermediate sums are < inner_dim * p^2 << 2^53.
    """
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.shape[1] * a.shape[0] * b.shape[1] > 1 << 16:
        c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    else:
        c = a @ b
    return c % p


def matpow_mod(a: np.ndarray, e: int, modulus: int) -> np.ndarray:
    """a**e with entries reduced mod `modulus` (not necessarily prime)."""
    n = a.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = a % modulus
    while e > 0:
        if e & 1:
            result = (result @ base) % modulus
        base = (base @ base) % modulus
        e >>= 1
    return result


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form. Returns (rref matrix, pivot columns, rank)."""
    r = as_gf(m, p).copy()
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pivot = -1
        for i in range(row, rows):
            if r[i, col]:
                pivot = i
                break
        if pivot == -1:
            continue
        if pivot != row:
            r[[row, pivot]] = r[[pivot, row]]
        r[row] = (r[row] * inv_mod(int(r[row, col]), p)) % p
        mask = r[:, col] != 0
        mask[row] = False
        if mask.any():
            r[mask] = (r[mask] - np.outer(r[mask, col], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots, len(pivots)


def row_space_basis(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Nonzero rows of the RREF, i.e. the canonical row-space basis."""
    r, pivots, rank = rref(m, p)
    return r[:rank].copy(), pivots


def kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (rows) of {x : m @ x = 0}."""
    m = as_gf(m, p)
    rows, cols = m.shape
    r, pivots, rank = rref(m, p)
    free = [j for j in range(cols) if j not in set(pivots)]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = (-int(r[i, f])) % p
    basis, _ = row_space_basis(basis, p)
    return basis


def solve_affine(
    m: np.ndarray, b: np.ndarray, p: int
) -> Optional[tuple[np.ndarray, "Subspace"]]:
    """Full solution set of m @ x = b, or None when inconsistent."""
    m = as_gf(m, p)
    b = as_gf(b, p).reshape(-1)
    if b.shape[0] != m.shape[0]:
        raise GFError("right-hand side length does not match row count")
    aug = np.concatenate([m, b.reshape(-1, 1)], axis=1)
    r, pivots, rank = rref(aug, p)
    cols = m.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x, Subspace.from_rows(kernel_basis(m, p), cols, p)


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^n held as a canonical RREF basis (rows)."""

    p: int
    ambient: int
    basis: np.ndarray = field(repr=False)
    pivots: tuple[int, ...] = ()

    @staticmethod
    def from_rows(rows, ambient: int, p: int) -> "Subspace":
        rows = as_gf(rows, p).reshape(-1, ambient) if np.size(rows) else np.zeros(
            (0, ambient), dtype=np.int64
        )
        basis, pivots = row_space_basis(rows, p)
        basis.setflags(write=False)
        return Subspace(p, ambient, basis, tuple(pivots))

    @staticmethod
    def zero(ambient: int, p: int) -> "Subspace":
        return Subspace.from_rows(np.zeros((0, ambient)), ambient, p)

    @staticmethod
    def full(ambient: int, p: int) -> "Subspace":
        return Subspace.from_rows(identity(ambient), ambient, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient == other.ambient
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def key(self) -> bytes:
        return self.basis.tobytes()

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient != other.ambient:
            raise GFError("subspaces live in different ambient spaces")

    def reduce_vector(self, v) -> np.ndarray:
        """Residual of v after eliminating the pivot coordinates."""
        v = as_gf(v, self.p).reshape(self.ambient)
        if self.dim:
            coeffs = v[list(self.pivots)]
            v = (v - coeffs @ self.basis) % self.p
        return v

    def contains_vector(self, v) -> bool:
        return not self.reduce_vector(v).any()

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains_vector(row) for row in other.basis)

    def coords(self, v) -> np.ndarray:
        """Coordinates of v in the canonical basis; v must lie in the space."""
        v = as_gf(v, self.p).reshape(self.ambient)
        c = v[list(self.pivots)] if self.dim else np.zeros(0, dtype=np.int64)
        if ((v - c @ self.basis) % self.p).any() if self.dim else v.any():
            raise GFError("vector is not in the subspace")
        return c

    def coords_rows(self, rows) -> np.ndarray:
        """Coordinates of many vectors (rows); all must lie in the space."""
        rows = as_gf(rows, self.p).reshape(-1, self.ambient)
        if not self.dim:
            if rows.any():
                raise GFError("vector is not in the subspace")
            return np.zeros((rows.shape[0], 0), dtype=np.int64)
        c = rows[:, list(self.pivots)]
        if ((rows - matmul(c, self.basis, self.p)) % self.p).any():
            raise GFError("vector is not in the subspace")
        return c

    def reduce_rows(self, rows) -> np.ndarray:
        """Residuals of many vectors after eliminating pivot coordinates."""
        rows = as_gf(rows, self.p).reshape(-1, self.ambient)
        if not self.dim:
            return rows
        c = rows[:, list(self.pivots)]
        return (rows - matmul(c, self.basis, self.p)) % self.p

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        stacked = np.concatenate([self.basis, other.basis], axis=0)
        return Subspace.from_rows(stacked, self.ambient, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient, self.p)
        # (a, b) with a @ U = b @ V  <=>  [U^T | -V^T] (a, b)^T = 0
        stacked = np.concatenate([self.basis.T, (-other.basis.T) % self.p], axis=1)
        pairs = kernel_basis(stacked, self.p)
        vecs = (pairs[:, : self.dim] @ self.basis) % self.p
        result = Subspace.from_rows(vecs, self.ambient, self.p)
        # modular dimension law is structural; violation means a bug
        assert (
            self.sum(other).dim + result.dim == self.dim + other.dim
        ), "dimension law violated in subspace intersection"
        return result


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u.sum(v)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def subspace_contains(u: Subspace, v: Subspace) -> bool:
    return u.contains(v)


def joint_kernel(matrices: Iterable[np.ndarray], ambient: int, p: int) -> Subspace:
    """Common kernel of a family of matrices acting on GF(p)^ambient."""
    mats = [as_gf(m, p) for m in matrices]
    if not mats:
        return Subspace.full(ambient, p)
    stacked = np.concatenate(mats, axis=0)
    return Subspace.from_rows(kernel_basis(stacked, p), ambient, p)


def all_vectors(n: int, p: int):
    """Iterate over all of GF(p)^n in lexicographic order."""
    v = np.zeros(n, dtype=np.int64)
    while True:
        yield v.copy()
        i = n - 1
        while i >= 0:
            v[i] += 1
            if v[i] < p:
                break
            v[i] = 0
            i -= 1
        if i < 0:
            return
