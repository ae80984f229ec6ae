"""Left modules over a structure-constant algebra and the Hom-level
machinery: Hom spaces, maps factoring through projectives, stable Hom,
syzygies, Ext^1, endomorphism algebras, tensors over an endomorphism
ring, projectivity and isomorphism testing.

Module elements are column vectors; action[i] is the matrix of e_i.
A homomorphism f: U -> V is a matrix F with rho_V(e_i) F = F rho_U(e_i).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import gflinalg as gf
from .algebras import Algebra, AlgebraHom, new_algebra, opposite
from .gflinalg import Subspace, as_gf
from .ideals import Ideal, IdealError, LEFT, TWO_SIDED


class ModuleError(ValueError):
    pass


class NotInvariantSubspace(ModuleError):
    pass


@dataclass(frozen=True, eq=False)
class AModule:
    algebra: Algebra
    dim: int
    action: np.ndarray = field(repr=False)  # (algebra.dim, dim, dim)

    def __post_init__(self):
        a = self.algebra
        act = as_gf(self.action, a.p)
        object.__setattr__(self, "action", act)
        act.setflags(write=False)
        if act.shape != (a.dim, self.dim, self.dim):
            raise ModuleError("action tensor has wrong shape")
        if not np.array_equal(self.act_of(a.unit), gf.identity(self.dim)):
            raise ModuleError("unit does not act as identity")
        # rho(g) rho(e_j) == rho(g e_j) on a generating set certifies the
        # representation law on all of A (the good set is a subalgebra).
        for g in a.generating_set():
            lg_mod = self.act_of(g)
            lg_alg = a.left_mult(g)
            for j in range(a.dim):
                lhs = gf.matmul(lg_mod, act[j], a.p)
                rhs = self.act_of(lg_alg[:, j])
                if not np.array_equal(lhs, rhs):
                    raise ModuleError(f"action not multiplicative at basis {j}")

    def act_of(self, x) -> np.ndarray:
        """Matrix of the action of an algebra element x."""
        x = as_gf(x, self.algebra.p).reshape(self.algebra.dim)
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        xf = x.astype(np.float64)
        out = np.einsum("i,iab->ab", xf, self.action.astype(np.float64))
        return np.rint(out).astype(np.int64) % self.algebra.p

    def apply(self, x, v) -> np.ndarray:
        v = as_gf(v, self.algebra.p).reshape(self.dim)
        return gf.matmul(self.act_of(x), v.reshape(-1, 1), self.algebra.p).reshape(-1)

    def is_zero(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True, eq=False)
class ModHom:
    source: AModule
    target: AModule
    matrix: np.ndarray = field(repr=False)  # (target.dim, source.dim)

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise ModuleError("homomorphism between modules over different algebras")
        a = self.source.algebra
        m = as_gf(self.matrix, a.p)
        object.__setattr__(self, "matrix", m)
        m.setflags(write=False)
        if m.shape != (self.target.dim, self.source.dim):
            raise ModuleError("homomorphism matrix has wrong shape")
        for g in a.generating_set():
            lhs = gf.matmul(self.target.act_of(g), m, a.p)
            rhs = gf.matmul(m, self.source.act_of(g), a.p)
            if not np.array_equal(lhs, rhs):
                raise ModuleError("matrix does not intertwine the actions")

    def apply(self, v) -> np.ndarray:
        v = as_gf(v, self.source.algebra.p).reshape(self.source.dim)
        return gf.matmul(self.matrix, v.reshape(-1, 1), self.source.algebra.p).reshape(-1)

    def compose(self, first: "ModHom") -> "ModHom":
        """self o first (apply `first`, then self)."""
        if first.target is not self.source:
            raise ModuleError("composition mismatch")
        return ModHom(
            first.source, self.target,
            gf.matmul(self.matrix, first.matrix, self.source.algebra.p),
        )


def regular_module(a: Algebra) -> AModule:
    action = a.structure.transpose(0, 2, 1)  # L_{e_i}[l, j] = c[i, j, l]
    return AModule(a, a.dim, action)


def free_module(a: Algebra, n: int) -> AModule:
    if n < 0:
        raise ModuleError("rank must be nonnegative")
    d = a.dim
    reg = a.structure.transpose(0, 2, 1)
    action = np.zeros((d, n * d, n * d), dtype=np.int64)
    for t in range(n):
        action[:, t * d : (t + 1) * d, t * d : (t + 1) * d] = reg
    return AModule(a, n * d, action)


def ideal_as_module(i: Ideal) -> AModule:
    """A left (or two-sided) ideal as a left module, in its canonical basis."""
    if i.sided not in (LEFT, TWO_SIDED):
        raise IdealError("only left or two-sided ideals carry a left module structure")
    a = i.parent
    b = i.space.basis
    k = i.dim
    action = np.zeros((a.dim, k, k), dtype=np.int64)
    if k:
        for idx in range(a.dim):
            prods = a.products_of_rows(a.basis_vector(idx), b)  # rows e_idx * b_t
            action[idx] = i.space.coords_rows(prods).T
    return AModule(a, k, action)


def submodule(u: AModule, space: Subspace) -> tuple[AModule, ModHom]:
    """The submodule on an invariant subspace, with its inclusion."""
    a = u.algebra
    if space.ambient != u.dim or space.p != a.p:
        raise ModuleError("subspace does not live in the module")
    k = space.dim
    action = np.zeros((a.dim, k, k), dtype=np.int64)
    for i in range(a.dim):
        prods = gf.matmul(u.action[i], space.basis.T, a.p).T
        try:
            action[i] = space.coords_rows(prods).T
        except gf.GFError:
            raise NotInvariantSubspace("subspace is not invariant under the action")
    sub = AModule(a, k, action)
    incl = ModHom(sub, u, space.basis.T.copy())
    return sub, incl


def quotient_module_with_projection(
    u: AModule, space: Subspace
) -> tuple[AModule, ModHom]:
    a = u.algebra
    if space.ambient != u.dim or space.p != a.p:
        raise ModuleError("subspace does not live in the module")
    # invariance check
    for i in range(a.dim):
        prods = gf.matmul(u.action[i], space.basis.T, a.p).T
        if space.reduce_rows(prods).any():
            raise NotInvariantSubspace("subspace is not invariant under the action")
    pivots = set(space.pivots)
    free = [j for j in range(u.dim) if j not in pivots]
    proj = space.reduce_rows(gf.identity(u.dim))[:, free].T.copy()
    k = len(free)
    action = np.zeros((a.dim, k, k), dtype=np.int64)
    # quotient action column t = projection of rho_i applied to the coset
    # representative e_{free[t]}
    for i in range(a.dim):
        cols = u.action[i][:, free]
        action[i] = space.reduce_rows(cols.T)[:, free].T
    quot = AModule(a, k, action)
    return quot, ModHom(u, quot, proj)


def quotient_module(u: AModule, space: Subspace) -> AModule:
    return quotient_module_with_projection(u, space)[0]


def trivial_module(kg: Algebra) -> AModule:
    if kg.group is None:
        raise ModuleError("trivial module is defined for group algebras only")
    action = np.ones((kg.dim, 1, 1), dtype=np.int64)
    return AModule(kg, 1, action)


def restrict(hom: AlgebraHom, u: AModule) -> AModule:
    """Pull a module over hom.target back to hom.source via rho o hom."""
    if u.algebra is not hom.target:
        raise ModuleError("module is not over the homomorphism's target")
    mf = hom.matrix.astype(np.float64)
    act = np.einsum(
        "ki,kab->iab", mf, u.action.astype(np.float64), optimize=True
    )
    action = np.rint(act).astype(np.int64) % hom.source.p
    return AModule(hom.source, u.dim, action)


def generators_of_module(u: AModule) -> list[int]:
    """Indices of basis vectors generating u. Prefers a single cyclic
    generator among the basis vectors; otherwise greedy by basis order."""
    a = u.algebra
    if u.dim == 0:
        return []
    spans = []
    for j in range(u.dim):
        gen_span = Subspace.from_rows(u.action[:, :, j], u.dim, a.p)
        if gen_span.dim == u.dim:
            return [j]
        spans.append(gen_span)
    gens: list[int] = []
    covered = Subspace.zero(u.dim, a.p)
    for j in range(u.dim):
        if covered.contains_vector(gf.identity(u.dim)[j]):
            continue
        gens.append(j)
        covered = _module_closure(u, covered.sum(spans[j]))
        if covered.dim == u.dim:
            break
    return gens


def _module_closure(u: AModule, span: Subspace) -> Subspace:
    a = u.algebra
    while True:
        rows = [span.basis]
        for i in range(a.dim):
            rows.append(gf.matmul(u.action[i], span.basis.T, a.p).T)
        nxt = Subspace.from_rows(np.concatenate(rows, axis=0), u.dim, a.p)
        if nxt.dim == span.dim:
            return nxt
        span = nxt


def free_cover(u: AModule) -> tuple[AModule, ModHom, list[int]]:
    """A surjection A^n -> u built on a generating set of basis vectors."""
    a = u.algebra
    gens = generators_of_module(u)
    n = len(gens)
    free = free_module(a, n)
    pi = np.zeros((u.dim, n * a.dim), dtype=np.int64)
    for t, g in enumerate(gens):
        # basis (t, i) of A^n maps to e_i . u_g
        pi[:, t * a.dim : (t + 1) * a.dim] = u.action[:, :, g].T
    cover = ModHom(free, u, pi)
    rank = gf.rref(pi, a.p)[2]
    assert rank == u.dim, "generating set does not cover the module"
    return free, cover, gens


def full_basis_cover(u: AModule) -> tuple[AModule, ModHom]:
    """The cover A^dim(u) -> u using every basis vector as a generator."""
    a = u.algebra
    n = u.dim
    free = free_module(a, n)
    pi = np.zeros((u.dim, n * a.dim), dtype=np.int64)
    for t in range(n):
        pi[:, t * a.dim : (t + 1) * a.dim] = u.action[:, :, t].T
    return free, ModHom(free, u, pi)


def hom_space(u: AModule, v: AModule) -> list[ModHom]:
    """Canonical basis of Hom_A(u, v), solved from the intertwining system
    over a generating set of the algebra."""
    if u.algebra is not v.algebra:
        raise ModuleError("modules over different algebras")
    a = u.algebra
    if u.dim == 0 or v.dim == 0:
        return []
    gens = a.generating_set()
    if not gens:
        basis = gf.identity(u.dim * v.dim)
    else:
        rows = []
        eye_u = gf.identity(u.dim)
        eye_v = gf.identity(v.dim)
        for g in gens:
            rows.append(
                (np.kron(v.act_of(g), eye_u) - np.kron(eye_v, u.act_of(g).T))
                % a.p
            )
        basis = gf.kernel_basis(np.concatenate(rows, axis=0), a.p)
    return [ModHom(u, v, row.reshape(v.dim, u.dim)) for row in basis]


def hom_flat_space(u: AModule, v: AModule) -> Subspace:
    homs = hom_space(u, v)
    rows = (
        np.asarray([h.matrix.reshape(-1) for h in homs])
        if homs
        else np.zeros((0, max(u.dim * v.dim, 1)))
    )
    return Subspace.from_rows(rows, max(u.dim * v.dim, 1), u.algebra.p)


def hom_pr(u: AModule, v: AModule, cover: str = "minimal") -> Subspace:
    """Hom^pr(u, v): maps factoring through a projective, as a subspace in
    the coordinates of the canonical Hom basis.

    Any map through a projective factors through any epi from a free
    module onto v, so {pi o g : g in Hom(u, A^n)} is the whole of
    Hom^pr(u, v) independently of the chosen cover.
    """
    if cover == "minimal":
        _, pi, _ = free_cover(v)
    elif cover == "full":
        _, pi = full_basis_cover(v)
    else:
        raise ModuleError(f"unknown cover choice {cover!r}")
    hom_basis = hom_flat_space(u, v)
    lifted = hom_space(u, pi.source)
    if not lifted:
        return Subspace.zero(hom_basis.dim, u.algebra.p)
    rows = []
    for g in lifted:
        composed = gf.matmul(pi.matrix, g.matrix, u.algebra.p)
        rows.append(hom_basis.coords(composed.reshape(-1)))
    return Subspace.from_rows(np.asarray(rows), hom_basis.dim, u.algebra.p)


def hom_dim(u: AModule, v: AModule) -> int:
    return len(hom_space(u, v))


def hom_pr_dim(u: AModule, v: AModule) -> int:
    return hom_pr(u, v).dim


def stable_hom_dim(u: AModule, v: AModule) -> int:
    homs = hom_flat_space(u, v)
    return homs.dim - hom_pr(u, v).dim


def syzygy(u: AModule) -> AModule:
    """Kernel of the free cover A^n -> u, as a submodule of A^n. Projective
    summands are not stripped."""
    return syzygy_with_inclusion(u)[0]


def syzygy_with_inclusion(
    u: AModule, cover: str = "minimal"
) -> tuple[AModule, ModHom, ModHom]:
    """(Omega(u), inclusion Omega -> A^n, cover A^n -> u)."""
    if cover == "minimal":
        free, pi, _ = free_cover(u)
    elif cover == "full":
        free, pi = full_basis_cover(u)
    else:
        raise ModuleError(f"unknown cover choice {cover!r}")
    kernel = Subspace.from_rows(
        gf.kernel_basis(pi.matrix, u.algebra.p), free.dim, u.algebra.p
    )
    sub, incl = submodule(free, kernel)
    return sub, incl, pi


def ext1_dim(u: AModule, v: AModule, cover: str = "minimal") -> int:
    """dim Ext^1_A(u, v) = dim coker(Hom(A^n, v) -> Hom(Omega u, v))."""
    omega, incl, pi = syzygy_with_inclusion(u, cover)
    if omega.dim == 0:
        return 0
    target_homs = hom_flat_space(omega, v)
    free_homs = hom_space(pi.source, v)
    if not free_homs:
        return target_homs.dim
    rows = []
    for h in free_homs:
        restricted = gf.matmul(h.matrix, incl.matrix, u.algebra.p)
        rows.append(target_homs.coords(restricted.reshape(-1)))
    image = Subspace.from_rows(np.asarray(rows), target_homs.dim, u.algebra.p)
    return target_homs.dim - image.dim


def end_algebra(u: AModule) -> tuple[Algebra, list[ModHom]]:
    """End_A(u) with multiplication = composition, in the canonical
    Hom-basis; returns the algebra and the basis."""
    homs = hom_space(u, u)
    h = len(homs)
    if h == 0:
        raise ModuleError("zero module has no unital endomorphism algebra")
    flat = Subspace.from_rows(
        np.asarray([f.matrix.reshape(-1) for f in homs]), u.dim * u.dim, u.algebra.p
    )
    c = np.zeros((h, h, h), dtype=np.int64)
    for s in range(h):
        for t in range(h):
            prod = gf.matmul(homs[s].matrix, homs[t].matrix, u.algebra.p)
            c[s, t] = flat.coords(prod.reshape(-1))
    unit = flat.coords(gf.identity(u.dim).reshape(-1))
    labels = [f"f{t}" for t in range(h)]
    return new_algebra(u.algebra.p, c, unit, labels), homs


@dataclass(frozen=True, eq=False)
class Bimodule:
    """An (A, D)-bimodule: a left A-module with a commuting right D-action.

    right_action[i] is the matrix of (-) . d_i; the right-module law reads
    R_i R_j = sum_k c_D[j, i, k] R_k (an anti-homomorphism of D).
    """

    left_algebra: Algebra
    right_algebra: Algebra
    dim: int
    left_action: np.ndarray = field(repr=False)
    right_action: np.ndarray = field(repr=False)

    def __post_init__(self):
        la = as_gf(self.left_action, self.left_algebra.p)
        ra = as_gf(self.right_action, self.right_algebra.p)
        object.__setattr__(self, "left_action", la)
        object.__setattr__(self, "right_action", ra)
        la.setflags(write=False)
        ra.setflags(write=False)
        if self.left_algebra.p != self.right_algebra.p:
            raise ModuleError("bimodule requires one common ground field")
        # left module law
        AModule(self.left_algebra, self.dim, la)
        # right module law = left module law over the opposite algebra
        AModule(opposite(self.right_algebra), self.dim, ra)
        # the two actions commute
        p = self.left_algebra.p
        for i in range(self.left_algebra.dim):
            for j in range(self.right_algebra.dim):
                lhs = gf.matmul(la[i], ra[j], p)
                rhs = gf.matmul(ra[j], la[i], p)
                if not np.array_equal(lhs, rhs):
                    raise ModuleError("left and right actions do not commute")

    def left_module(self) -> AModule:
        return AModule(self.left_algebra, self.dim, self.left_action)


def algebra_as_bimodule(a: Algebra) -> Bimodule:
    reg = a.structure.transpose(0, 2, 1)
    right = a.structure.transpose(1, 2, 0)  # R_{e_j}[l, i] = c[i, j, l]
    return Bimodule(a, a, a.dim, reg, right)


def quotient_bimodule(a: Algebra, quotient: Algebra, proj: AlgebraHom) -> Bimodule:
    """A/I as an (A, A/I)-bimodule: left action through the projection,
    right action the regular one of A/I."""
    reg_q = quotient.structure.transpose(0, 2, 1)
    mf = proj.matrix.astype(np.float64)
    left = np.rint(
        np.einsum("ki,kab->iab", mf, reg_q.astype(np.float64), optimize=True)
    ).astype(np.int64) % a.p
    right = quotient.structure.transpose(1, 2, 0)
    return Bimodule(a, quotient, quotient.dim, left, right)


def endomorphism_bimodule(u: AModule) -> tuple[Bimodule, Algebra, list[ModHom]]:
    """u as an (A, D)-bimodule for D = End_A(u)^op acting by evaluation."""
    e_alg, homs = end_algebra(u)
    d = opposite(e_alg)
    right = np.asarray([h.matrix for h in homs])
    bim = Bimodule(u.algebra, d, u.dim, u.action, right)
    return bim, e_alg, homs


def tensor_over_with_projection(
    y: Bimodule, m: AModule
) -> tuple[AModule, np.ndarray]:
    """(Y tensor_D M, projection matrix from Y (x) M coordinates)."""
    if m.algebra is not y.right_algebra:
        raise ModuleError("module is not over the bimodule's right algebra")
    a, dD = y.left_algebra, y.right_algebra.dim
    ydim, mdim = y.dim, m.dim
    amb = ydim * mdim
    rels = []
    for i in range(dD):
        ri = y.right_action[i]
        rho = m.action[i]
        for alpha in range(ydim):
            for b in range(mdim):
                rel = np.zeros(amb, dtype=np.int64)
                rel[np.arange(ydim) * mdim + b] += ri[:, alpha]
                rel[alpha * mdim + np.arange(mdim)] -= rho[:, b]
                rels.append(rel % a.p)
    rel_space = Subspace.from_rows(
        np.asarray(rels) if rels else np.zeros((0, amb)), amb, a.p
    )
    action = np.zeros((a.dim, amb, amb), dtype=np.int64)
    eye_m = gf.identity(mdim)
    for i in range(a.dim):
        action[i] = np.kron(y.left_action[i], eye_m)
    big = AModule(a, amb, action)
    quot, proj = quotient_module_with_projection(big, rel_space)
    return quot, proj.matrix


def tensor_over(y: Bimodule, m: AModule) -> AModule:
    return tensor_over_with_projection(y, m)[0]


def adjunction_unit_iso(y: Bimodule, m: AModule) -> bool:
    """Whether M -> Hom_A(Y, Y tensor_D M), m -> (y -> y (x) m), is bijective."""
    t, proj = tensor_over_with_projection(y, m)
    y_left = y.left_module()
    hom_basis = hom_flat_space(y_left, t)
    if hom_basis.dim != m.dim:
        return False
    cols = []
    for b in range(m.dim):
        phi = proj[:, np.arange(y.dim) * m.dim + b]
        try:
            cols.append(hom_basis.coords(phi.reshape(-1)))
        except gf.GFError:
            raise ModuleError("unit image is not a homomorphism; bimodule law broken")
    mat = np.asarray(cols)
    return gf.rref(mat, y.left_algebra.p)[2] == m.dim


def is_projective_over(e: Algebra, m: AModule) -> bool:
    """Projectivity via splitting of a free cover: m is projective iff some
    s in Hom_e(m, E^n) satisfies pi o s = id."""
    if m.algebra is not e:
        raise ModuleError("module is not over the given algebra")
    if m.dim == 0:
        return True
    free, pi, _ = free_cover(m)
    nd, md = free.dim, m.dim
    gens = e.generating_set()
    rows = []
    eye_m = gf.identity(md)
    eye_nd = gf.identity(nd)
    for g in gens:
        rows.append(
            (np.kron(free.act_of(g), eye_m) - np.kron(eye_nd, m.act_of(g).T)) % e.p
        )
    rows.append(np.kron(pi.matrix, eye_m))
    rhs = np.concatenate(
        [np.zeros(len(gens) * nd * md, dtype=np.int64), eye_m.reshape(-1)]
    )
    system = np.concatenate(rows, axis=0)
    return gf.solve_affine(system, rhs, e.p) is not None


ISO_EXHAUSTIVE_LIMIT = 1 << 16
ISO_RANDOM_TRIALS = 1024


def is_isomorphic(
    u: AModule, v: AModule, seed: int = 0
) -> Optional[bool]:
    """True with an invertible intertwiner, False when provably not
    isomorphic, None when the randomized search was inconclusive."""
    if u.algebra is not v.algebra:
        raise ModuleError("modules over different algebras")
    if u.dim != v.dim:
        return False
    if u.dim == 0:
        return True
    p = u.algebra.p
    homs = hom_space(u, v)
    if not homs:
        return False
    h = len(homs)
    stack = np.asarray([f.matrix for f in homs])
    if p**h <= ISO_EXHAUSTIVE_LIMIT:
        for coeffs in gf.all_vectors(h, p):
            if not coeffs.any():
                continue
            combo = np.rint(
                np.einsum("t,tab->ab", coeffs.astype(np.float64), stack.astype(np.float64))
            ).astype(np.int64) % p
            if gf.rref(combo, p)[2] == u.dim:
                return True
        return False
    rng = np.random.default_rng(seed)
    for _ in range(ISO_RANDOM_TRIALS):
        coeffs = rng.integers(0, p, size=h)
        if not coeffs.any():
            continue
        combo = np.rint(
            np.einsum("t,tab->ab", coeffs.astype(np.float64), stack.astype(np.float64))
        ).astype(np.int64) % p
        if gf.rref(combo, p)[2] == u.dim:
            return True
    return None


def find_isomorphism(u: AModule, v: AModule) -> Optional[ModHom]:
    """An explicit invertible intertwiner, when the exhaustive search
    applies and succeeds."""
    if u.dim != v.dim:
        return None
    homs = hom_space(u, v)
    if not homs:
        return None
    p = u.algebra.p
    h = len(homs)
    if p**h > ISO_EXHAUSTIVE_LIMIT:
        return None
    stack = np.asarray([f.matrix for f in homs])
    for coeffs in gf.all_vectors(h, p):
        if not coeffs.any():
            continue
        combo = np.rint(
            np.einsum("t,tab->ab", coeffs.astype(np.float64), stack.astype(np.float64))
        ).astype(np.int64) % p
        if gf.rref(combo, p)[2] == u.dim:
            return ModHom(u, v, combo)
    return None
