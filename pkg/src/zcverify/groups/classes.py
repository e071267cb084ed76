"""Conjugacy classes, power maps and the deterministic labeling convention.

Classes are labeled "1a, 2a, 2b, ..." ordered by (element order, class size,
smallest element index); that tiebreak makes labels stable across runs.
External tables may permute same-order-same-size labels, which is why all
golden comparisons elsewhere go through table automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import GroupData


def _letters(k: int) -> str:
    out = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        out = chr(ord("a") + r) + out
    return out


@dataclass(frozen=True)
class ConjClass:
    label: str
    rep: int            # element index of the representative
    size: int
    order: int          # element order
    members: frozenset


class ClassData:
    def __init__(self, group: GroupData):
        self.group = group
        g = group
        n = g.order
        class_of = [-1] * n
        classes: list[list[int]] = []
        gen_idx = [g.index[p] for p in g.generators]
        for start in range(n):
            if class_of[start] >= 0:
                continue
            orbit = [start]
            class_of[start] = len(classes)
            pos = 0
            while pos < len(orbit):
                x = orbit[pos]
                pos += 1
                for gi in gen_idx:
                    y = g.conjugate_idx(x, gi)
                    if class_of[y] < 0:
                        class_of[y] = len(classes)
                        orbit.append(y)
            classes.append(orbit)
        # deterministic ordering: (element order, size, min element index)
        keyed = sorted(
            range(len(classes)),
            key=lambda ci: (g.element_order(classes[ci][0]), len(classes[ci]), min(classes[ci])),
        )
        relabel = {old: new for new, old in enumerate(keyed)}
        self.class_of = [relabel[c] for c in class_of]
        ordered = [classes[old] for old in keyed]
        per_order_count: dict[int, int] = {}
        self.classes: list[ConjClass] = []
        for members in ordered:
            rep = min(members)
            o = g.element_order(rep)
            k = per_order_count.get(o, 0)
            per_order_count[o] = k + 1
            self.classes.append(
                ConjClass(
                    label=f"{o}{_letters(k)}",
                    rep=rep,
                    size=len(members),
                    order=o,
                    members=frozenset(members),
                )
            )
        self.label_to_idx = {c.label: i for i, c in enumerate(self.classes)}
        self.inverse_map = tuple(
            self.class_of[g.inv_idx(c.rep)] for c in self.classes
        )
        exp = g.exponent()
        self.powermaps = {
            p: tuple(self.class_of[g.power_idx(c.rep, p)] for c in self.classes)
            for p in _primes_upto(exp)
        }

    def n_classes(self) -> int:
        return len(self.classes)

    def power_class(self, ci: int, k: int) -> int:
        """Class of rep^k; consistent with the stored prime power maps."""
        return self.class_of[self.group.power_idx(self.classes[ci].rep, k)]

    def labels(self) -> list[str]:
        return [c.label for c in self.classes]

    def identity_class(self) -> int:
        return self.class_of[0] if self.group.elements[0] == tuple(range(self.group.degree)) else self.class_of[
            self.group.index[tuple(range(self.group.degree))]
        ]


def _primes_upto(n: int) -> list[int]:
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = False
    return out


def conjugacy_classes(group: GroupData) -> ClassData:
    """Spec operation; cached on the group."""
    if group._classdata is None:
        group._classdata = ClassData(group)
    return group._classdata
