"""Group-algebra specific constructions: augmentation ideals, subgroup
sums, and the induced ideal kG . I(kN) of a normal subgroup."""
from __future__ import annotations

import numpy as np

from .algebras import Algebra, AlgebraHom, group_algebra, quotient_algebra
from .gflinalg import Subspace
from .groups import Group, NotNormal, SubgroupHandle, is_normal
from .ideals import Ideal, IdealError, TWO_SIDED, ideal_generated


def _require_group_algebra(kg: Algebra) -> Group:
    if kg.group is None:
        raise IdealError("operation requires a group-algebra-tagged algebra")
    return kg.group


def augmentation_ideal(kg: Algebra) -> Ideal:
    """Kernel of the coefficient-sum functional; spanned by {g - 1}."""
    g = _require_group_algebra(kg)
    rows = []
    for y in range(g.order):
        if y == g.identity:
            continue
        v = np.zeros(kg.dim, dtype=np.int64)
        v[y] = 1
        v[g.identity] -= 1
        rows.append(v % kg.p)
    space = Subspace.from_rows(
        np.asarray(rows) if rows else np.zeros((0, kg.dim)), kg.dim, kg.p
    )
    return Ideal(kg, space, TWO_SIDED)


def subgroup_sum(kg: Algebra, h: SubgroupHandle) -> np.ndarray:
    """The element sum(y for y in h) of kG."""
    g = _require_group_algebra(kg)
    if h.parent is not g:
        raise IdealError("subgroup does not belong to the algebra's group")
    v = np.zeros(kg.dim, dtype=np.int64)
    for y in h.members:
        v[y] += 1
    return v % kg.p


def induced_ideal(kg: Algebra, n: SubgroupHandle) -> Ideal:
    """kG . I(kN) for a normal subgroup N: the ideal generated by
    {y - 1 : y in N}; the kernel of kG -> k[G/N]."""
    g = _require_group_algebra(kg)
    if n.parent is not g:
        raise IdealError("subgroup does not belong to the algebra's group")
    if not is_normal(n):
        raise NotNormal("induced ideal requires a normal subgroup")
    gens = []
    for y in n.members:
        v = np.zeros(kg.dim, dtype=np.int64)
        v[y] = 1
        v[g.identity] -= 1
        gens.append(v % kg.p)
    return ideal_generated(kg, gens, TWO_SIDED)


def group_quotient_hom(kg: Algebra, n: SubgroupHandle) -> tuple[Algebra, AlgebraHom]:
    """kG -> kG/(kG . I(kN)); the quotient is k[G/N] in coset coordinates."""
    ideal = induced_ideal(kg, n)
    return quotient_algebra(kg, ideal.space)
