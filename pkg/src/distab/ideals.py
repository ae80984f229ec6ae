"""One- and two-sided ideals, annihilators, the Jacobson radical and
radical/socle series.

The radical is computed by the characteristic-p trace filtration
(iterated kernels of the functionals z -> tr(lift(L_z)^(p^i)) / p^i mod p)
and the returned ideal is contract-checked: it must be nilpotent and the
algorithm must report zero radical for the quotient. For dim <= 8 an
exhaustive element-wise search serves as a fallback.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import gflinalg as gf
from .algebras import Algebra, AlgebraHom, quotient_algebra
from .gflinalg import Subspace, as_gf


class IdealError(ValueError):
    pass


class RadicalContractViolation(IdealError):
    pass


LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"


@dataclass(frozen=True, eq=False)
class Ideal:
    parent: Algebra
    space: Subspace
    sided: str = TWO_SIDED

    def __post_init__(self):
        if self.sided not in (LEFT, RIGHT, TWO_SIDED):
            raise IdealError(f"unknown sidedness {self.sided!r}")
        a, s = self.parent, self.space
        if s.ambient != a.dim or s.p != a.p:
            raise IdealError("subspace does not live in the algebra")
        # closure under the declared multiplications, over the ideal basis
        if s.dim:
            eye = gf.identity(a.dim)
            if self.sided in (LEFT, TWO_SIDED):
                if s.reduce_rows(a.products_of_rows(eye, s.basis)).any():
                    raise IdealError("subspace not closed under left multiplication")
            if self.sided in (RIGHT, TWO_SIDED):
                if s.reduce_rows(a.products_of_rows(s.basis, eye)).any():
                    raise IdealError("subspace not closed under right multiplication")

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_zero(self) -> bool:
        return self.space.is_zero()

    def is_proper(self) -> bool:
        return not self.space.contains_vector(self.parent.unit)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.parent is other.parent
            and self.space == other.space
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.space))


def zero_ideal(a: Algebra) -> Ideal:
    return Ideal(a, Subspace.zero(a.dim, a.p))


def unit_ideal(a: Algebra) -> Ideal:
    return Ideal(a, Subspace.full(a.dim, a.p))


def ideal_generated(a: Algebra, gens: Sequence, sided: str = TWO_SIDED) -> Ideal:
    """Smallest ideal of the given sidedness containing gens (span-closure
    fixpoint under the basis multiplication operators)."""
    rows = [as_gf(g, a.p).reshape(a.dim) for g in gens]
    span = Subspace.from_rows(
        np.asarray(rows) if rows else np.zeros((0, a.dim)), a.dim, a.p
    )
    eye = gf.identity(a.dim)
    while True:
        new_rows = [span.basis]
        if span.dim:
            if sided in (LEFT, TWO_SIDED):
                new_rows.append(a.products_of_rows(eye, span.basis))
            if sided in (RIGHT, TWO_SIDED):
                new_rows.append(a.products_of_rows(span.basis, eye))
        nxt = Subspace.from_rows(np.concatenate(new_rows, axis=0), a.dim, a.p)
        if nxt.dim == span.dim:
            return Ideal(a, nxt, sided)
        span = nxt


def right_annihilator(i: Ideal) -> Ideal:
    """r(I) = {a : I a = 0}; a right ideal, two-sided when I is."""
    a = i.parent
    ops = a.left_ops_of_rows(i.space.basis) if i.space.dim else []
    space = gf.joint_kernel(list(ops), a.dim, a.p)
    sided = TWO_SIDED if i.sided == TWO_SIDED else RIGHT
    return Ideal(a, space, sided)


def left_annihilator(i: Ideal) -> Ideal:
    """l(I) = {a : a I = 0}; a left ideal, two-sided when I is."""
    a = i.parent
    ops = a.right_ops_of_rows(i.space.basis) if i.space.dim else []
    space = gf.joint_kernel(list(ops), a.dim, a.p)
    sided = TWO_SIDED if i.sided == TWO_SIDED else LEFT
    return Ideal(a, space, sided)


def annihilator_of_element(a: Algebra, z) -> Ideal:
    """ann(z) = {x : x z = 0} for central z (then a two-sided ideal)."""
    z = as_gf(z, a.p).reshape(a.dim)
    space = Subspace.from_rows(gf.kernel_basis(a.right_mult(z), a.p), a.dim, a.p)
    return Ideal(a, space, TWO_SIDED)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    if i.parent is not j.parent:
        raise IdealError("ideals have different parent algebras")
    a = i.parent
    if i.space.dim and j.space.dim:
        rows = a.products_of_rows(i.space.basis, j.space.basis)
    else:
        rows = np.zeros((0, a.dim), dtype=np.int64)
    space = Subspace.from_rows(rows, a.dim, a.p)
    sided_left = i.sided in (LEFT, TWO_SIDED)
    sided_right = j.sided in (RIGHT, TWO_SIDED)
    if sided_left and sided_right:
        sided = TWO_SIDED
    elif sided_left:
        sided = LEFT
    elif sided_right:
        sided = RIGHT
    else:
        raise IdealError("product of these sidednesses need not be an ideal")
    return Ideal(a, space, sided)


def ideal_power(i: Ideal, n: int) -> Ideal:
    if n < 1:
        raise IdealError("power must be >= 1")
    result = i
    for _ in range(n - 1):
        result = ideal_product(result, i)
    return result


def is_nilpotent(i: Ideal) -> bool:
    current = i
    while True:
        if current.is_zero():
            return True
        nxt = ideal_product(current, i)
        if nxt.dim == current.dim:
            return False
        current = nxt


def _trace_functional(a: Algebra, basis: np.ndarray, stage: int) -> Optional[np.ndarray]:
    """tau_stage on the span of `basis`: z -> tr(lift(L_z)^(p^stage)) / p^stage
    mod p, as a value per basis row. None when the divisibility that makes
    the functional well-defined fails (outside the algorithm's competence)."""
    p = a.p
    modulus = p ** (stage + 1)
    values = np.zeros(basis.shape[0], dtype=np.int64)
    for t, b in enumerate(basis):
        lift = a.left_mult(b) % p  # integer lift with entries in [0, p)
        power = gf.matpow_mod(lift, p**stage, modulus)
        tr = int(np.trace(power) % modulus)
        if tr % (p**stage):
            return None
        values[t] = (tr // (p**stage)) % p
    return values


def _radical_by_filtration(a: Algebra) -> Optional[Subspace]:
    p, d = a.p, a.dim
    span = Subspace.full(d, p)
    stages = 0
    while p**stages < d:
        stages += 1
    for stage in range(stages + 1):
        if span.is_zero():
            break
        tau = _trace_functional(a, span.basis, stage)
        if tau is None:
            return None
        # right-multiplication of the current basis by e_j, in coordinates
        rows = []
        for j in range(d):
            re = a.right_mult(a.basis_vector(j))
            prods = gf.matmul(re, span.basis.T, p).T
            try:
                coords = span.coords_rows(prods)
            except gf.GFError:
                return None  # not a right ideal: filtration inapplicable
            rows.append((coords @ tau) % p)
        condition = np.asarray(rows)  # shape (d, span.dim), acting on coefficients
        coeff_kernel = gf.kernel_basis(condition, p)
        new_basis = (coeff_kernel @ span.basis) % p
        span = Subspace.from_rows(new_basis, d, p)
    return span


def _radical_exhaustive(a: Algebra) -> Subspace:
    """Largest nilpotent ideal as the sum of all nilpotent principal ideals.
    Exhaustive over all elements; only for small algebras."""
    total = Subspace.zero(a.dim, a.p)
    for v in gf.all_vectors(a.dim, a.p):
        if not v.any() or total.contains_vector(v):
            continue
        candidate = ideal_generated(a, [v])
        if is_nilpotent(candidate):
            total = total.sum(candidate.space)
    return total


def jacobson_radical(a: Algebra, _check: bool = True) -> Ideal:
    """The largest nilpotent ideal. Contract-checked: the result must be a
    nilpotent two-sided ideal and the quotient must have zero radical."""
    space = _radical_by_filtration(a)
    candidate: Optional[Ideal] = None
    if space is not None:
        try:
            candidate = Ideal(a, space, TWO_SIDED)
        except IdealError:
            candidate = None
    if candidate is not None and not is_nilpotent(candidate):
        candidate = None
    if candidate is None:
        if a.dim <= 8 and a.p**a.dim <= 1 << 20:
            candidate = Ideal(a, _radical_exhaustive(a), TWO_SIDED)
            if not is_nilpotent(candidate):
                raise RadicalContractViolation(
                    "exhaustive fallback produced a non-nilpotent ideal"
                )
        else:
            raise RadicalContractViolation(
                "trace filtration failed and the algebra is too large for "
                "the exhaustive fallback"
            )
    if _check and not candidate.is_zero():
        quotient, _ = quotient_algebra(a, candidate.space)
        if not jacobson_radical(quotient, _check=False).is_zero():
            raise RadicalContractViolation("quotient by the radical is not semisimple")
    return candidate


def radical_series(a: Algebra) -> list[Ideal]:
    """[J, J^2, ..., 0]; ends with the zero ideal (J is nilpotent)."""
    j = jacobson_radical(a)
    series = [j]
    while not series[-1].is_zero():
        series.append(ideal_product(series[-1], j))
    return series


def socle_series(a: Algebra) -> list[Ideal]:
    """[soc^1, soc^2, ...] with soc^n = r(J^n); stops once the whole algebra
    is reached."""
    j = jacobson_radical(a)
    series: list[Ideal] = []
    power = j
    while True:
        series.append(right_annihilator(power))
        if series[-1].dim == a.dim:
            return series
        if power.is_zero():
            # r(0) = A should already have terminated the loop
            return series
        power = ideal_product(power, j)


def socle(a: Algebra) -> Ideal:
    return right_annihilator(jacobson_radical(a))


def left_socle_series(a: Algebra) -> list[Ideal]:
    """Left-sided variant: l(J^n); equal to the right series for symmetric
    algebras."""
    j = jacobson_radical(a)
    series: list[Ideal] = []
    power = j
    while True:
        series.append(left_annihilator(power))
        if series[-1].dim == a.dim:
            return series
        if power.is_zero():
            return series
        power = ideal_product(power, j)


def quotient_by(i: Ideal) -> tuple[Algebra, AlgebraHom]:
    """A / I for a proper two-sided ideal."""
    if i.sided != TWO_SIDED:
        raise IdealError("can only quotient by a two-sided ideal")
    if not i.is_proper():
        raise IdealError("ideal contains the unit")
    return quotient_algebra(i.parent, i.space)


def enumerate_ideals_exhaustive(a: Algebra) -> list[Ideal]:
    """All two-sided ideals of a, by closure of generator sets (BFS).

    Every ideal arises as a chain 0 < <v1> < <v1,v2> < ..., so growing each
    found ideal by every vector outside it reaches the full ideal lattice.
    Only for p^dim <= 2^20.
    """
    p, d = a.p, a.dim
    if p**d > 1 << 20:
        raise IdealError("algebra too large for exhaustive ideal enumeration")
    seen: dict[bytes, Ideal] = {}
    zero = zero_ideal(a)
    seen[zero.space.key()] = zero
    queue = [zero]
    while queue:
        current = queue.pop()
        for v in gf.all_vectors(d, p):
            if not v.any() or current.space.contains_vector(v):
                continue
            bigger = ideal_generated(
                a, list(current.space.basis) + [v], TWO_SIDED
            )
            key = bigger.space.key()
            if key not in seen:
                seen[key] = bigger
                queue.append(bigger)
    return sorted(seen.values(), key=lambda i: (i.dim, i.space.key()))


def sample_ideals(a: Algebra, count: int, seed: int = 0) -> list[Ideal]:
    """Distinct two-sided ideals from seeded random generator sets."""
    rng = np.random.default_rng(seed)
    seen: dict[bytes, Ideal] = {}
    trials = 0
    while len(seen) < count and trials < 50 * max(count, 1):
        trials += 1
        n_gens = int(rng.integers(1, 3))
        gens = rng.integers(0, a.p, size=(n_gens, a.dim))
        ideal = ideal_generated(a, list(gens), TWO_SIDED)
        seen.setdefault(ideal.space.key(), ideal)
    return sorted(seen.values(), key=lambda i: (i.dim, i.space.key()))
