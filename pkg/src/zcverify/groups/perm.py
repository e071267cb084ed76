"""Permutation groups by full element enumeration (desk scale, |G| <= 300).

Permutations are tuples of 0-based images. Groups are closed by BFS from the
generators; there is no Schreier-Sims machinery because nothing here needs it.
"""

from __future__ import annotations

from math import gcd

Perm = tuple

ORDER_CAP = 300
CAP_SAFETY = 4


class OrderCapExceeded(Exception):
    pass


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def mul(a: Perm, b: Perm) -> Perm:
    """(a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_order(a: Perm) -> int:
    seen = [False] * len(a)
    result = 1
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        result = result * length // gcd(result, length)
    return result


def perm_power(a: Perm, k: int) -> Perm:
    n = perm_order(a)
    k %= n
    out = identity_perm(len(a))
    base = a
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


def from_cycles(degree: int, cycles) -> Perm:
    """Build a permutation from 1-based cycles, e.g. [(1,2,3),(4,5)]."""
    images = list(range(degree))
    for cyc in cycles:
        for i, pt in enumerate(cyc):
            images[cyc[i] - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(images)


class GroupData:
    """A fully enumerated permutation group."""

    def __init__(self, name: str, degree: int, generators):
        self.name = name
        self.degree = degree
        self.generators = tuple(tuple(g) for g in generators)
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"generator is not a bijection on [1,{degree}]")
        self.elements = self._close()
        self.order = len(self.elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._mtable: list[list[int]] | None = None
        self._inv: list[int] | None = None
        self._orders: list[int] | None = None
        self._classdata = None

    def _close(self) -> tuple[Perm, ...]:
        ident = identity_perm(self.degree)
        seen = {ident}
        order_list = [ident]
        frontier = [ident]
        cap = ORDER_CAP * CAP_SAFETY
        while frontier:
            new_frontier = []
            for e in frontier:
                for g in self.generators:
                    x = mul(e, g)
                    if x not in seen:
                        seen.add(x)
                        order_list.append(x)
                        new_frontier.append(x)
                        if len(seen) > cap:
                            raise OrderCapExceeded(
                                f"group closure for {self.name!r} passed {cap} elements"
                            )
            frontier = new_frontier
        return tuple(order_list)

    # -- cached structure ---------------------------------------------

    def mtable(self) -> list[list[int]]:
        if self._mtable is None:
            idx = self.index
            els = self.elements
            self._mtable = [[idx[mul(a, b)] for b in els] for a in els]
        return self._mtable

    def inv_idx(self, i: int) -> int:
        if self._inv is None:
            self._inv = [self.index[inverse(g)] for g in self.elements]
        return self._inv[i]

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [perm_order(g) for g in self.elements]
        return self._orders[i]

    def exponent(self) -> int:
        e = 1
        for i in range(self.order):
            o = self.element_order(i)
            e = e * o // gcd(e, o)
        return e

    def power_idx(self, i: int, k: int) -> int:
        return self.index[perm_power(self.elements[i], k)]

    def conjugate_idx(self, i: int, by: int) -> int:
        g = self.elements[by]
        return self.index[mul(mul(g, self.elements[i]), inverse(g))]

    def __repr__(self) -> str:
        return f"GroupData({self.name!r}, degree={self.degree}, order={self.order})"


def group_from_generators(degree: int, generators, name: str) -> GroupData:
    """Spec operation: closure-enumerate a permutation group of order <= 300."""
    g = GroupData(name, degree, generators)
    if not 1 <= g.order <= ORDER_CAP:
        raise OrderCapExceeded(f"order {g.order} outside supported range")
    return g
