"""Normal subgroups, quotients with class fusion, lower central series and
the structural predicates used by the sieve.

Normal subgroups are generated as closures of conjugacy classes and then
completed under pairwise joins; every normal subgroup is a join of class
closures, so this enumeration is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import ClassData, conjugacy_classes
from .perm import GroupData, group_from_generators


@dataclass(frozen=True)
class SubgroupHandle:
    members: frozenset
    order: int
    normal: bool
    p_group: int | None  # the prime when the order is a prime power > 1

    def contains_class(self, cd: ClassData, ci: int) -> bool:
        return cd.classes[ci].rep in self.members


def _p_group_prime(order: int) -> int | None:
    if order < 2:
        return None
    p = 2
    m = order
    while p * p <= m:
        if m % p == 0:
            break
        p += 1
    else:
        p = m
    while m % p == 0:
        m //= p
    return p if m == 1 else None


def subgroup_closure(g: GroupData, seed) -> frozenset:
    """Closure of a set of element indices under multiplication."""
    mt = g.mtable()
    members = set(seed)
    members.add(g.index[tuple(range(g.degree))])
    frontier = list(members)
    gens = list(seed)
    while frontier:
        new = []
        for a in frontier:
            row = mt[a]
            for b in gens:
                c = row[b]
                if c not in members:
                    members.add(c)
                    new.append(c)
        frontier = new
    return frozenset(members)


def _make_handle(g: GroupData, members: frozenset, normal: bool) -> SubgroupHandle:
    return SubgroupHandle(
        members=members, order=len(members), normal=normal, p_group=_p_group_prime(len(members))
    )


def normal_subgroups(g: GroupData) -> list[SubgroupHandle]:
    """All normal subgroups, from class closures completed under joins."""
    cd = conjugacy_classes(g)
    ident = frozenset({g.index[tuple(range(g.degree))]})
    found: set[frozenset] = {ident, frozenset(range(g.order))}
    seeds = []
    for c in cd.classes:
        n = subgroup_closure(g, c.members)
        if n not in found:
            found.add(n)
        seeds.append(n)
    changed = True
    while changed:
        changed = False
        current = sorted(found, key=lambda s: (len(s), sorted(s)))
        for a in current:
            for b in seeds:
                if b <= a:
                    continue
                j = subgroup_closure(g, a | b)
                if j not in found:
                    found.add(j)
                    changed = True
    out = [_make_handle(g, m, True) for m in found]
    out.sort(key=lambda h: (h.order, sorted(h.members)))
    return out


def is_cyclic_subgroup(g: GroupData, h: SubgroupHandle) -> bool:
    return any(g.element_order(i) == h.order for i in h.members)


def quotient_with_fusion(g: GroupData, n: SubgroupHandle):
    """Quotient acting on cosets plus the class-fusion map.

    Returns (quotient GroupData, fusion list, to_quotient) where fusion maps a
    G-class index to the class index of its image in G/N and to_quotient maps
    a G element index to the quotient element index.
    """
    if not n.normal:
        raise ValueError("subgroup is not normal")
    if not 1 < n.order < g.order:
        raise ValueError("quotient requires a proper nontrivial normal subgroup")
    mt = g.mtable()
    members = sorted(n.members)
    coset_of = [-1] * g.order
    cosets = []
    for i in range(g.order):
        if coset_of[i] >= 0:
            continue
        cid = len(cosets)
        row = mt[i]
        cos = sorted(row[m] for m in members)
        for x in cos:
            coset_of[x] = cid
        cosets.append(cos)
    deg = len(cosets)

    def induced(ei: int) -> tuple:
        row = mt[ei]
        return tuple(coset_of[row[cosets[c][0]]] for c in range(deg))

    gens = [induced(g.index[p]) for p in g.generators]
    q = group_from_generators(deg, gens, f"{g.name}/N{n.order}")
    assert q.order * n.order == g.order, "coset action must be faithful for normal N"
    qcd = conjugacy_classes(q)
    gcd_ = conjugacy_classes(g)
    to_quotient = [q.index[induced(i)] for i in range(g.order)]
    fusion = [qcd.class_of[to_quotient[c.rep]] for c in gcd_.classes]
    return q, fusion, to_quotient


def _commutator_subgroup(g: GroupData, a_members, b_members) -> frozenset:
    mt = g.mtable()
    comms = set()
    for x in a_members:
        xi = g.inv_idx(x)
        for y in b_members:
            yi = g.inv_idx(y)
            comms.add(mt[mt[xi][yi]][mt[x][y]])
    return subgroup_closure(g, comms)


def lower_central_series(g: GroupData) -> list[SubgroupHandle]:
    """gamma_1 = G, gamma_{k+1} = [gamma_k, G], until stable."""
    full = frozenset(range(g.order))
    series = [full]
    current = full
    while True:
        nxt = _commutator_subgroup(g, current, range(g.order))
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return [_make_handle(g, m, True) for m in series]


def derived_series(g: GroupData) -> list[frozenset]:
    full = frozenset(range(g.order))
    series = [full]
    current = full
    while True:
        nxt = _commutator_subgroup(g, current, current)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


@dataclass(frozen=True)
class StructureFlags:
    nilpotent: bool
    cyclic_by_abelian: bool
    derived_in_sylow: bool
    c2_direct_factor: bool   # a central involution with an index-2 complement exists
    solvable: bool
    exponent: int


def structure_predicates(g: GroupData) -> StructureFlags:
    lcs = lower_central_series(g)
    nilpotent = lcs[-1].order == 1
    ds = derived_series(g)
    solvable = len(ds[-1]) == 1
    derived = _commutator_subgroup(g, range(g.order), range(g.order))
    derived_in_sylow = _p_group_prime(len(derived)) is not None or len(derived) == 1
    normals = normal_subgroups(g)
    cyclic_by_abelian = any(
        derived <= h.members and is_cyclic_subgroup(g, h) for h in normals
    )
    c2 = False
    if g.order % 2 == 0:
        mt = g.mtable()
        central_involutions = [
            i
            for i in range(g.order)
            if g.element_order(i) == 2 and all(mt[i][j] == mt[j][i] for j in range(g.order))
        ]
        if central_involutions:
            halves = [h for h in normals if h.order * 2 == g.order]
            c2 = any(
                z not in h.members for z in central_involutions for h in halves
            )
    return StructureFlags(
        nilpotent=nilpotent,
        cyclic_by_abelian=cyclic_by_abelian,
        derived_in_sylow=derived_in_sylow,
        c2_direct_factor=c2,
        solvable=solvable,
        exponent=g.exponent(),
    )


def c2_complement(g: GroupData) -> GroupData | None:
    """If G = C2 x H for a central involution with complement H, return H."""
    if g.order % 2:
        return None
    mt = g.mtable()
    central_involutions = [
        i
        for i in range(g.order)
        if g.element_order(i) == 2 and all(mt[i][j] == mt[j][i] for j in range(g.order))
    ]
    if not central_involutions:
        return None
    for h in normal_subgroups(g):
        if h.order * 2 != g.order:
            continue
        for z in central_involutions:
            if z not in h.members:
                gens = [g.elements[i] for i in sorted(h.members)]
                return group_from_generators(g.degree, gens, f"{g.name}!c2complement")
    return None
