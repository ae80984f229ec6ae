"""Finite groups by multiplication table, plus the subgroup machinery
needed for group-algebra criteria: normality, quotients, commutators,
the p-residual O^p, and the p-rank of the abelianization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .gflinalg import Subspace, check_prime, kernel_basis


class GroupError(ValueError):
    pass


class NotNormal(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group: index 0..n-1 with an n x n multiplication table."""

    table: np.ndarray = field(repr=False)
    identity: int = 0
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64).copy()
        object.__setattr__(self, "table", t)
        t.setflags(write=False)
        n = self.order
        if t.shape != (n, n):
            raise GroupError("table is not square")
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        # Latin square: rows and columns are permutations
        target = np.arange(n)
        for i in range(n):
            if not np.array_equal(np.sort(t[i]), target):
                raise GroupError(f"row {i} is not a permutation")
            if not np.array_equal(np.sort(t[:, i]), target):
                raise GroupError(f"column {i} is not a permutation")
        e = self.identity
        if not (np.array_equal(t[e], target) and np.array_equal(t[:, e], target)):
            raise GroupError("identity law fails")
        # associativity on all triples, vectorized: t[t[i,j],k] == t[i,t[j,k]]
        if not np.array_equal(t[t, :], t[:, t]):
            raise GroupError("multiplication table is not associative")
        # inverses exist because each row is a permutation hitting identity

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(np.where(self.table[a] == self.identity)[0][0])

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != self.identity:
            x = self.mult(x, a)
            n += 1
        return n

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else f"g{a}"

    def is_abelian(self) -> bool:
        return np.array_equal(self.table, self.table.T)


@dataclass(frozen=True)
class SubgroupHandle:
    parent: Group
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", mem)
        g = self.parent
        ms = set(mem)
        if g.identity not in ms:
            raise GroupError("subgroup must contain the identity")
        for a in mem:
            if g.inverse(a) not in ms:
                raise GroupError("subgroup not closed under inverses")
            for b in mem:
                if g.mult(a, b) not in ms:
                    raise GroupError("subgroup not closed under products")

    @property
    def order(self) -> int:
        return len(self.members)

    def is_trivial(self) -> bool:
        return self.order == 1


def _group_from_table(table, identity: int, labels) -> Group:
    return Group(np.asarray(table, dtype=np.int64), identity, tuple(labels))


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return _group_from_table(table, 0, [f"t^{k}" for k in range(n)])


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order 2m: indices r^k, then s*r^k."""
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be even and >= 2")
    m = order // 2
    n = order

    def mul(a, b):
        ea, ka = divmod(a, m)
        eb, kb = divmod(b, m)
        # (s^ea r^ka)(s^eb r^kb) = s^(ea+eb) r^(kb + ka*(-1)^eb)
        e = (ea + eb) % 2
        k = (kb + (ka if eb == 0 else -ka)) % m
        return e * m + k

    table = [[mul(a, b) for b in range(n)] for a in range(n)]
    labels = [f"r^{k}" for k in range(m)] + [f"s*r^{k}" for k in range(m)]
    return _group_from_table(table, 0, labels)


def quaternion8() -> Group:
    """Q_8 = {1, -1, i, -i, j, -j, k, -k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # represent as (sign, letter) with letter in {1, i, j, k}
    base = {"1": 0, "i": 1, "j": 2, "k": 3}
    mul_letter = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }

    def decode(a):
        sign = -1 if names[a].startswith("-") else 1
        return sign, base[names[a].lstrip("-")]

    def encode(sign, letter):
        name = ("" if sign == 1 else "-") + "1ijk"[letter]
        return names.index(name)

    def mul(a, b):
        sa, la = decode(a)
        sb, lb = decode(b)
        sc, lc = mul_letter[(la, lb)]
        return encode(sa * sb * sc, lc)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return _group_from_table(table, 0, names)


def symmetric3() -> Group:
    """S_3 as permutations of {0,1,2} in a fixed listing."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]

    def mul(a, b):
        pa, pb = perms[a], perms[b]
        return perms.index(tuple(pa[pb[i]] for i in range(3)))

    table = [[mul(a, b) for b in range(6)] for a in range(6)]
    labels = ["e", "(012)", "(021)", "(12)", "(02)", "(01)"]
    return _group_from_table(table, 0, labels)


def direct_product(g: Group, h: Group) -> Group:
    ng, nh = g.order, h.order
    n = ng * nh

    def mul(a, b):
        ag, ah = divmod(a, nh)
        bg, bh = divmod(b, nh)
        return g.mult(ag, bg) * nh + h.mult(ah, bh)

    table = [[mul(a, b) for b in range(n)] for a in range(n)]
    labels = [f"({g.label(a)},{h.label(b)})" for a in range(ng) for b in range(nh)]
    return _group_from_table(table, g.identity * nh + h.identity, labels)


def subgroup(g: Group, members: Sequence[int]) -> SubgroupHandle:
    return SubgroupHandle(g, tuple(members))


def subgroup_generated(g: Group, gens: Sequence[int]) -> SubgroupHandle:
    closure = {g.identity}
    frontier = list(set(int(x) for x in gens))
    closure.update(frontier)
    while frontier:
        nxt = []
        for a in list(closure):
            for b in frontier:
                for c in (g.mult(a, b), g.mult(b, a)):
                    if c not in closure:
                        closure.add(c)
                        nxt.append(c)
        frontier = nxt
    return SubgroupHandle(g, tuple(sorted(closure)))


def trivial_subgroup(g: Group) -> SubgroupHandle:
    return SubgroupHandle(g, (g.identity,))


def subgroup_as_group(h: SubgroupHandle) -> Group:
    """The subgroup as a Group in its own right, in member order."""
    g = h.parent
    index = {m: t for t, m in enumerate(h.members)}
    table = [[index[g.mult(x, y)] for y in h.members] for x in h.members]
    labels = [g.label(m) for m in h.members]
    return _group_from_table(table, index[g.identity], labels)


def is_normal(h: SubgroupHandle) -> bool:
    g = h.parent
    mem = set(h.members)
    return all(
        g.mult(g.mult(a, x), g.inverse(a)) in mem
        for a in range(g.order)
        for x in h.members
    )


def quotient_group(g: Group, n: SubgroupHandle) -> tuple[Group, list[int]]:
    """Quotient by a normal subgroup; returns (G/N, index map G -> G/N)."""
    if n.parent is not g:
        raise GroupError("subgroup does not belong to the given group")
    if not is_normal(n):
        raise NotNormal("subgroup is not normal")
    cosets: list[frozenset[int]] = []
    index_map = [-1] * g.order
    for a in range(g.order):
        if index_map[a] >= 0:
            continue
        coset = frozenset(g.mult(a, x) for x in n.members)
        idx = len(cosets)
        cosets.append(coset)
        for b in coset:
            index_map[b] = idx
    table = [
        [index_map[g.mult(min(ca), min(cb))] for cb in cosets] for ca in cosets
    ]
    labels = ["{" + ",".join(g.label(b) for b in sorted(c)) + "}" for c in cosets]
    q = _group_from_table(table, index_map[g.identity], labels)
    return q, index_map


def commutator_subgroup(g: Group) -> SubgroupHandle:
    comms = {
        g.mult(g.mult(g.inverse(a), g.inverse(b)), g.mult(a, b))
        for a in range(g.order)
        for b in range(g.order)
    }
    return subgroup_generated(g, sorted(comms))


def o_p(g: Group, p: int) -> SubgroupHandle:
    """Smallest normal subgroup with p-group quotient: generated by all
    elements of order prime to p."""
    check_prime(p)
    gens = [a for a in range(g.order) if g.element_order(a) % p != 0]
    h = subgroup_generated(g, gens)
    assert is_normal(h), "O^p must be normal"
    q, _ = quotient_group(g, h)
    m = q.order
    while m % p == 0:
        m //= p
    assert m == 1, "quotient by O^p must be a p-group"
    return h


def p_rank_abelianization(g: Group, p: int) -> int:
    """dim_Fp Hom(G, F_p^+), computed two independent ways and cross-checked.

    Route 1: p-torsion rank of the abelianization (counts invariant factors
    divisible by p). Route 2: direct linear solve of the homomorphism
    equations f(ab) = f(a) + f(b) over F_p.
    """
    check_prime(p)
    ab, _ = quotient_group(g, commutator_subgroup(g))
    torsion = sum(
        1 for a in range(ab.order) if ab.element_order(a) in (1, p)
    )
    rank1 = 0
    while p ** (rank1 + 1) <= torsion:
        rank1 += 1
    if p**rank1 != torsion:
        raise GroupError("p-torsion count is not a p-power; table corrupt")

    n = g.order
    rows = []
    for a in range(n):
        for b in range(n):
            row = np.zeros(n, dtype=np.int64)
            row[g.mult(a, b)] += 1
            row[a] -= 1
            row[b] -= 1
            rows.append(row % p)
    rank2 = kernel_basis(np.asarray(rows), p).shape[0]
    assert rank1 == rank2, (
        f"p-rank disagreement: invariant factors give {rank1}, "
        f"hom equations give {rank2}"
    )
    return rank1


def hom_to_fp_space(g: Group, p: int) -> Subspace:
    """The space of group homomorphisms G -> F_p^+ as vectors of values."""
    n = g.order
    rows = []
    for a in range(n):
        for b in range(n):
            row = np.zeros(n, dtype=np.int64)
            row[g.mult(a, b)] += 1
            row[a] -= 1
            row[b] -= 1
            rows.append(row % p)
    return Subspace.from_rows(kernel_basis(np.asarray(rows), p), n, p)
