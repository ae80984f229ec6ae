"""Finite-dimensional associative unital algebras over GF(p) given by
structure constants, with validated builders, quotients, opposites,
centers and multiplication-operator matrices.

The structure tensor c has shape (d, d, d) with e_i * e_j = sum_k c[i,j,k] e_k.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import gflinalg as gf
from .gflinalg import Subspace, as_gf, check_prime
from .groups import Group


class AlgebraError(ValueError):
    pass


class AssociativityViolation(AlgebraError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")
        self.triple = (i, j, k)


class UnitViolation(AlgebraError):
    def __init__(self, i: int):
        super().__init__(f"unit law fails at basis vector e{i}")
        self.index = i


def _contract_left(structure: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    """Matrix of v -> x*v in the basis: L[l, j] = sum_i x_i c[i,j,l]."""
    d = structure.shape[0]
    flat = structure.reshape(d, d * d).astype(np.float64)
    out = np.rint(x.astype(np.float64) @ flat).astype(np.int64).reshape(d, d)
    return (out % p).T


def _contract_right(structure: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    """Matrix of v -> v*x: R[l, i] = sum_j x_j c[i,j,l]."""
    d = structure.shape[0]
    swapped = structure.transpose(1, 0, 2)
    flat = swapped.reshape(d, d * d).astype(np.float64)
    out = np.rint(x.astype(np.float64) @ flat).astype(np.int64).reshape(d, d)
    return (out % p).T


@dataclass(frozen=True, eq=False)
class Algebra:
    """Associative unital algebra by structure constants over GF(p)."""

    p: int
    dim: int
    structure: np.ndarray = field(repr=False)
    unit: np.ndarray = field(repr=False)
    labels: Optional[tuple[str, ...]] = None
    group: Optional[Group] = None
    form_candidates: tuple[np.ndarray, ...] = ()

    def __post_init__(self):
        check_prime(self.p)
        c = as_gf(self.structure, self.p)
        u = as_gf(self.unit, self.p).reshape(-1)
        object.__setattr__(self, "structure", c)
        object.__setattr__(self, "unit", u)
        c.setflags(write=False)
        u.setflags(write=False)
        if self.dim < 1:
            raise AlgebraError("algebras are nonzero")
        if c.shape != (self.dim, self.dim, self.dim):
            raise AlgebraError("structure tensor has wrong shape")
        if u.shape != (self.dim,):
            raise AlgebraError("unit vector has wrong length")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def multiply(self, x, y) -> np.ndarray:
        x = as_gf(x, self.p).reshape(self.dim)
        y = as_gf(y, self.p).reshape(self.dim)
        return gf.matmul(self.left_mult(x), y.reshape(-1, 1), self.p).reshape(-1)

    def left_mult(self, x) -> np.ndarray:
        return _contract_left(self.structure, as_gf(x, self.p).reshape(self.dim), self.p)

    def right_mult(self, x) -> np.ndarray:
        return _contract_right(self.structure, as_gf(x, self.p).reshape(self.dim), self.p)

    def left_ops_of_rows(self, rows) -> np.ndarray:
        """Stack of left-multiplication matrices L_x for each row x."""
        b = as_gf(rows, self.p).reshape(-1, self.dim).astype(np.float64)
        cf = self.structure.astype(np.float64)
        out = np.einsum("ki,ijl->klj", b, cf, optimize=True)
        return np.rint(out).astype(np.int64) % self.p

    def right_ops_of_rows(self, rows) -> np.ndarray:
        """Stack of right-multiplication matrices R_x for each row x."""
        b = as_gf(rows, self.p).reshape(-1, self.dim).astype(np.float64)
        cf = self.structure.astype(np.float64)
        out = np.einsum("kj,ijl->kli", b, cf, optimize=True)
        return np.rint(out).astype(np.int64) % self.p

    def products_of_rows(self, left_rows, right_rows) -> np.ndarray:
        """All pairwise products x*y, x over left_rows, y over right_rows,
        flattened to shape (len(left)*len(right), dim)."""
        bl = as_gf(left_rows, self.p).reshape(-1, self.dim).astype(np.float64)
        br = as_gf(right_rows, self.p).reshape(-1, self.dim).astype(np.float64)
        cf = self.structure.astype(np.float64)
        out = np.einsum("xi,yj,ijl->xyl", bl, br, cf, optimize=True)
        out = np.rint(out).astype(np.int64) % self.p
        return out.reshape(-1, self.dim)

    def is_unit_element(self, x) -> bool:
        return gf.rref(self.left_mult(x), self.p)[2] == self.dim

    def generating_set(self) -> list[np.ndarray]:
        """Small unital generating set: greedy over basis vectors, closing
        the generated subalgebra at each step."""
        span = Subspace.from_rows(self.unit.reshape(1, -1), self.dim, self.p)
        gens: list[np.ndarray] = []
        for i in range(self.dim):
            v = self.basis_vector(i)
            if span.contains_vector(v):
                continue
            gens.append(v)
            span = _subalgebra_closure(self, span.sum(
                Subspace.from_rows(v.reshape(1, -1), self.dim, self.p)))
            if span.dim == self.dim:
                break
        return gens


def _subalgebra_closure(a: Algebra, span: Subspace) -> Subspace:
    while True:
        rows = np.concatenate(
            [span.basis, a.products_of_rows(span.basis, span.basis)], axis=0
        )
        nxt = Subspace.from_rows(rows, a.dim, a.p)
        if nxt.dim == span.dim:
            return nxt
        span = nxt


def validate_algebra(a: Algebra, level: str = "auto") -> None:
    """Check the two-sided unit law and associativity.

    level: "full" checks all d^3 triples; "generators" checks products
    against a generating set; "auto" picks full for dim <= 64.
    """
    if level == "auto":
        level = "full" if a.dim <= 64 else "generators"
    c, p, d = a.structure, a.p, a.dim
    lu = a.left_mult(a.unit)
    ru = a.right_mult(a.unit)
    eye = gf.identity(d)
    for i in range(d):
        if not (np.array_equal(lu[:, i], eye[:, i]) and np.array_equal(ru[:, i], eye[:, i])):
            raise UnitViolation(i)
    if level == "full":
        cf = c.astype(np.float64)
        left = np.einsum("ijm,mkl->ijkl", cf, cf, optimize=True)
        right = np.einsum("jkm,iml->ijkl", cf, cf, optimize=True)
        diff = np.rint(left - right).astype(np.int64) % p
        if diff.any():
            i, j, k = np.argwhere(diff.any(axis=3))[0]
            raise AssociativityViolation(int(i), int(j), int(k))
    elif level == "generators":
        gens = a.generating_set() or [a.unit]
        for g in gens:
            lg = a.left_mult(g)
            for j in range(d):
                gj = a.multiply(g, a.basis_vector(j))
                lhs = gf.matmul(lg, a.left_mult(a.basis_vector(j)), p)
                if not np.array_equal(lhs, a.left_mult(gj)):
                    raise AssociativityViolation(-1, j, -1)
    else:
        raise AlgebraError(f"unknown validation level {level!r}")


def new_algebra(
    p: int,
    structure,
    unit,
    labels: Optional[Sequence[str]] = None,
    validation: str = "auto",
    group: Optional[Group] = None,
    form_candidates: Sequence[np.ndarray] = (),
) -> Algebra:
    structure = np.asarray(structure)
    d = structure.shape[0]
    a = Algebra(
        check_prime(p),
        d,
        structure,
        unit,
        tuple(labels) if labels else None,
        group,
        tuple(as_gf(f, p) for f in form_candidates),
    )
    validate_algebra(a, validation)
    return a


def quantum_complete_intersection(p: int, q: int, m: int, n: int) -> Algebra:
    """k<x,y | x^m = y^n = 0, x*y = q*y*x>, basis x^i y^j ordered with i major."""
    check_prime(p)
    q = int(q) % p
    if q == 0:
        raise AlgebraError("quantum parameter q must be nonzero")
    if m < 2 or n < 2:
        raise AlgebraError("orders m, n must be at least 2")
    d = m * n
    qinv = gf.inv_mod(q, p)

    def idx(i, j):
        return i * n + j

    c = np.zeros((d, d, d), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            for a in range(m):
                for b in range(n):
                    # (x^i y^j)(x^a y^b) = q^{-ja} x^{i+a} y^{j+b}
                    if i + a < m and j + b < n:
                        coeff = pow(qinv, j * a, p)
                        c[idx(i, j), idx(a, b), idx(i + a, j + b)] = coeff
    unit = np.zeros(d, dtype=np.int64)
    unit[idx(0, 0)] = 1
    labels = [f"x^{i}*y^{j}" for i in range(m) for j in range(n)]
    top = np.zeros(d, dtype=np.int64)
    top[idx(m - 1, n - 1)] = 1  # coefficient-of-top-monomial functional
    return new_algebra(p, c, unit, labels, form_candidates=[top])


def group_algebra(g: Group, p: int) -> Algebra:
    n = g.order
    c = np.zeros((n, n, n), dtype=np.int64)
    idx = np.arange(n)
    c[idx[:, None], idx[None, :], g.table] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[g.identity] = 1
    coeff_of_identity = unit.copy()  # the standard symmetrising form of kG
    labels = [g.label(i) for i in range(n)]
    return new_algebra(
        p, c, unit, labels, group=g, form_candidates=[coeff_of_identity]
    )


@dataclass(frozen=True, eq=False)
class AlgebraHom:
    source: Algebra
    target: Algebra
    matrix: np.ndarray = field(repr=False)  # (dim target) x (dim source)

    def __post_init__(self):
        m = as_gf(self.matrix, self.source.p)
        object.__setattr__(self, "matrix", m)
        m.setflags(write=False)
        if m.shape != (self.target.dim, self.source.dim):
            raise AlgebraError("homomorphism matrix has wrong shape")
        p = self.source.p
        if not np.array_equal(self.apply(self.source.unit), self.target.unit):
            raise AlgebraError("homomorphism does not preserve the unit")
        cs = self.source.structure.astype(np.float64)
        ct = self.target.structure.astype(np.float64)
        mf = m.astype(np.float64)
        lhs = np.rint(np.einsum("ijk,qk->ijq", cs, mf, optimize=True)).astype(np.int64) % p
        rhs = np.rint(
            np.einsum("ai,bj,abq->ijq", mf, mf, ct, optimize=True)
        ).astype(np.int64) % p
        if not np.array_equal(lhs, rhs):
            i, j = np.argwhere((lhs != rhs).any(axis=2))[0]
            raise AlgebraError(f"homomorphism not multiplicative at ({i},{j})")

    def apply(self, v) -> np.ndarray:
        v = as_gf(v, self.source.p).reshape(self.source.dim)
        return gf.matmul(self.matrix, v.reshape(-1, 1), self.source.p).reshape(-1)


def quotient_algebra(a: Algebra, ideal_space: Subspace) -> tuple[Algebra, AlgebraHom]:
    """A / I for a proper two-sided ideal subspace; returns (A/I, projection).

    Coset representatives are the standard basis vectors at the non-pivot
    columns of the ideal's canonical basis.
    """
    p, d = a.p, a.dim
    if ideal_space.contains_vector(a.unit):
        raise AlgebraError("ideal contains the unit; quotient would be zero")
    pivots = set(ideal_space.pivots)
    free = [j for j in range(d) if j not in pivots]
    dq = len(free)
    # e_fi * e_fj is a structure-tensor row; project all pairs at once
    pair_products = a.structure[np.ix_(free, free)].reshape(dq * dq, d)
    c = ideal_space.reduce_rows(pair_products)[:, free].reshape(dq, dq, dq)
    unit = ideal_space.reduce_vector(a.unit)[free]
    labels = tuple(f"[{a.label(f)}]" for f in free)
    quotient = new_algebra(p, c, unit, labels, group=None)
    proj = ideal_space.reduce_rows(gf.identity(d))[:, free].T.copy()
    return quotient, AlgebraHom(a, quotient, proj)


def quotient_section(a: Algebra, ideal_space: Subspace) -> np.ndarray:
    """Section matrix (dim a) x (dim quotient): columns are coset reps."""
    pivots = set(ideal_space.pivots)
    free = [j for j in range(a.dim) if j not in pivots]
    s = np.zeros((a.dim, len(free)), dtype=np.int64)
    for t, f in enumerate(free):
        s[f, t] = 1
    return s


def opposite(a: Algebra) -> Algebra:
    c_op = a.structure.transpose(1, 0, 2)
    return new_algebra(a.p, c_op, a.unit, a.labels, form_candidates=a.form_candidates)


def center(a: Algebra) -> Subspace:
    """{z : z e_i = e_i z for all i} as a subspace of the algebra."""
    mats = []
    for i in range(a.dim):
        e = a.basis_vector(i)
        mats.append((a.left_mult(e) - a.right_mult(e)) % a.p)
    return gf.joint_kernel(mats, a.dim, a.p)


def commutator_subspace(a: Algebra) -> Subspace:
    rows = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            rows.append((a.structure[i, j] - a.structure[j, i]) % a.p)
    if not rows:
        return Subspace.zero(a.dim, a.p)
    return Subspace.from_rows(np.asarray(rows), a.dim, a.p)


def left_mult(a: Algebra, x) -> np.ndarray:
    return a.left_mult(x)


def right_mult(a: Algebra, x) -> np.ndarray:
    return a.right_mult(x)


def with_form_candidates(a: Algebra, forms: Sequence[np.ndarray]) -> Algebra:
    """Same algebra value with extra candidate dual forms attached."""
    return Algebra(
        a.p, a.dim, a.structure, a.unit, a.labels, a.group,
        a.form_candidates + tuple(as_gf(f, a.p) for f in forms),
    )
