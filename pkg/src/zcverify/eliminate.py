"""The per-solution elimination battery.

Methods, in the pipeline's default order:
  - pzc3_resolve: support inside a normal p-subgroup makes the image trivial,
    so the candidate is rationally conjugate into that subgroup (resolved).
  - vanishing_constraint_eliminate: a normal p-subgroup forcing a strictly
    smaller image order makes partial augmentations vanish on classes whose
    p-part is too small; a violation eliminates the candidate.
  - lcs_resolve: solvable groups whose last lower-central term is divisible
    by p with p^4 not dividing |G| have all p-power-order candidates resolved.
  - quotient_eliminate: the fused candidate must still be possible in every
    proper quotient, inductively.
  - partially_central_test: the central Wedderburn part of the candidate,
    determined by its eigenvalue profile alone, must lie in the integral span
    of the group translates; an integral-solve failure eliminates.

Every outcome carries a witness sufficient to recheck it independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactmath import Cyclotomic, IntMatrix
from .exactmath.intmat import integer_solve_row_reduced, solvable_mod_prime_power
from .groups import CharacterTable, GroupData, SubgroupHandle, conjugacy_classes
from .help import CandidateSolution

METHODS = (
    "quotient",
    "partially-central",
    "pzc3-resolved",
    "vanishing-contradiction",
    "lcs-resolved",
    "lattice",
    "none",
)


@dataclass(frozen=True)
class EliminationOutcome:
    method: str
    witness: tuple  # sorted key/value pairs, JSON-friendly

    def __post_init__(self):
        assert self.method in METHODS

    @staticmethod
    def none() -> "EliminationOutcome":
        return EliminationOutcome("none", ())

    @staticmethod
    def of(method: str, **witness) -> "EliminationOutcome":
        return EliminationOutcome(method, tuple(sorted(witness.items())))

    def witness_dict(self) -> dict:
        return dict(self.witness)

    def to_json(self):
        return {"method": self.method, "witness": dict(self.witness)}


# -- Proposition-style checks ----------------------------------------------


def pzc3_resolve(
    sol: CandidateSolution, table: CharacterTable, normals: list[SubgroupHandle]
) -> EliminationOutcome:
    """Support inside a normal p-subgroup: resolved as rationally trivial."""
    cd = table.classes
    for h in normals:
        if h.p_group is None or not (1 < h.order < table.group.order):
            continue
        if all(h.contains_class(cd, ci) for ci in sol.support()):
            return EliminationOutcome.of(
                "pzc3-resolved",
                subgroup_order=h.order,
                prime=h.p_group,
                support=[cd.classes[ci].label for ci in sorted(sol.support())],
            )
    return EliminationOutcome.none()


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def vanishing_constraint_eliminate(
    sol: CandidateSolution,
    table: CharacterTable,
    normals: list[SubgroupHandle],
    quotient_exponents: dict[int, int],
) -> EliminationOutcome:
    """Smaller image order modulo a normal p-subgroup forces zero partial
    augmentations on classes with too small a p-part.

    quotient_exponents maps a normal subgroup's sorted-member hash index in
    `normals` to exp(G/N); the caller supplies it (computed once per group).
    """
    cd = table.classes
    n = sol.n
    for pos, h in enumerate(normals):
        if h.p_group is None or not (1 < h.order < table.group.order):
            continue
        p = h.p_group
        exp_q = quotient_exponents.get(pos)
        if exp_q is None:
            continue
        if gcd(n, exp_q) >= n:
            continue  # image order not forced below n
        pn = _p_part(n, p)
        if pn == 1:
            continue
        for ci, val in sol.pa:
            if val and _p_part(cd.classes[ci].order, p) < pn:
                return EliminationOutcome.of(
                    "vanishing-contradiction",
                    subgroup_order=h.order,
                    prime=p,
                    image_order_divides=gcd(n, exp_q),
                    violating_class=cd.classes[ci].label,
                    violating_value=val,
                )
    return EliminationOutcome.none()


def lcs_resolve(
    g: GroupData, n: int, last_term_order: int, solvable: bool
) -> EliminationOutcome:
    """Prime-power orders are resolved when p | |L| and p^4 does not divide |G|."""
    if not solvable:
        return EliminationOutcome.none()
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            break
        p += 1
    else:
        p = m
    while m % p == 0:
        m //= p
    if m != 1 or n == 1:
        return EliminationOutcome.none()  # not a prime power
    if last_term_order % p == 0 and g.order % (p**4) != 0:
        return EliminationOutcome.of(
            "lcs-resolved", prime=p, last_term_order=last_term_order, order=n
        )
    return EliminationOutcome.none()


# -- quotient method --------------------------------------------------------


def fuse_solution(
    sol: CandidateSolution,
    table: CharacterTable,
    fusion: list[int],
    n_members: frozenset,
):
    """Push a candidate through G -> G/N.

    Returns (image order m, fused pa over quotient class indices, fused chain
    order -> quotient class index), or None when the image unit is trivial
    (support inside N, or a fused pa concentrated with value 1).
    """
    cd = table.classes
    n = sol.n
    chain = sol.chain.as_dict()
    if all(cd.classes[ci].rep in n_members for ci in sol.support()):
        return None  # image is the identity unit
    # least divisor d > 1 of n whose chain class lands inside N; u^n = 1 always does
    m = n
    for d in sorted(d for d in range(2, n) if n % d == 0):
        if cd.classes[chain[n // d]].rep in n_members:
            m = d
            break
    fused_pa: dict[int, int] = {}
    for ci, val in sol.pa:
        qc = fusion[ci]
        fused_pa[qc] = fused_pa.get(qc, 0) + val
        if fused_pa[qc] == 0:
            del fused_pa[qc]
    assert sum(fused_pa.values()) == 1, "fusion must preserve the augmentation"
    fused_chain: dict[int, int] = {}
    for e in (e for e in range(2, m) if m % e == 0):
        # image of u^{m/e} has order e; u^{m/e} itself has order n*e/m
        fused_chain[e] = fusion[chain[n * e // m]]
    return m, fused_pa, fused_chain


def quotient_eliminate(
    sol: CandidateSolution,
    table: CharacterTable,
    normals: list[SubgroupHandle],
    quotient_oracle,
) -> EliminationOutcome:
    """Inductive elimination through proper quotients.

    quotient_oracle(handle) -> (quotient GroupData, fusion, quotient report
    accessor) where the accessor answers `matching_survives(m, fused_pa,
    fused_chain)`: True when a surviving candidate with this data exists in
    the quotient. The pipeline provides it (with memoization); this function
    owns only the fusion logic and the verdict.
    """
    cd = table.classes
    for h in normals:
        if not (1 < h.order < table.group.order):
            continue
        q_access = quotient_oracle(h)
        if q_access is None:
            continue
        quotient, fusion, accessor = q_access
        fused = fuse_solution(sol, table, fusion, h.members)
        if fused is None:
            continue
        m, fused_pa, fused_chain = fused
        if len(fused_pa) <= 1:
            continue  # trivial image carries no obstruction here
        if not accessor(m, fused_pa, fused_chain):
            qcd = conjugacy_classes(quotient)
            return EliminationOutcome.of(
                "quotient",
                subgroup_order=h.order,
                quotient=quotient.name,
                image_order=m,
                fused_pa={qcd.classes[ci].label: v for ci, v in sorted(fused_pa.items())},
            )
    return EliminationOutcome.none()


# -- partially central test -------------------------------------------------


def central_character_set(sol: CandidateSolution, table: CharacterTable) -> list[tuple[int, int]]:
    """Rows whose profile is concentrated: mu_l = chi(1) at a single l.

    Returns (row index, l) pairs; the component eigenvalue is zeta_n^l.
    """
    out = []
    for ri, mus in enumerate(sol.profile):
        deg = table.degrees[ri]
        for l, m in enumerate(mus):
            if m == deg:
                out.append((ri, l))
                break
    return out


def partially_central_system(sol: CandidateSolution, table: CharacterTable):
    """The integral membership system for the candidate's central part.

    Returns (rows, target): rows[h][g] = |G| * coeff of h in g*e, target[h] =
    |G| * coeff of h in u*e. Both sides are integral because the concentrated
    set S is Galois-stable, making the relevant sums rational algebraic
    integers.
    """
    g = table.group
    cd = table.classes
    n = sol.n
    s_set = central_character_set(sol, table)
    assert s_set, "linear characters are always concentrated"
    order = g.order
    kappa: list[int] = []
    target: list[int] = []
    class_of = cd.class_of
    for ei in range(order):
        y_class = class_of[ei]
        yi_class = class_of[g.inv_idx(ei)]
        k_val = Cyclotomic.zero()
        f_val = Cyclotomic.zero()
        for ri, l in s_set:
            chi1 = table.degrees[ri]
            k_val = k_val + table.rows[ri][y_class] * chi1
            f_val = f_val + table.rows[ri][yi_class] * Cyclotomic.zeta(n, l) * chi1
        assert k_val.is_rational() and f_val.is_rational(), "S must be Galois-stable"
        kq, fq = k_val.rational_value(), f_val.rational_value()
        assert kq.denominator == 1 and fq.denominator == 1
        kappa.append(int(kq))
        target.append(int(fq))
    mt = g.mtable()
    rows = []
    for h in range(order):
        row_mt = mt[g.inv_idx(h)]
        rows.append([kappa[row_mt[gi]] for gi in range(order)])
    return rows, target, s_set


def partially_central_test(
    sol: CandidateSolution, table: CharacterTable, exact: bool = False
) -> EliminationOutcome:
    """Check that the central part of the candidate lies in Z G e.

    The lattice spanned by the columns contains |G| times every integral
    vector of its rational span, and the target is such a vector, so
    membership is equivalent to solvability of the system modulo every prime
    power dividing |G|; that modular decision has no coefficient growth.
    `exact=True` forces the generic integer_solve path instead (used by the
    cross-validation tests).
    """
    g = table.group
    n = sol.n
    rows, target, s_set = partially_central_system(sol, table)
    cert = None
    if exact:
        x, cert = integer_solve_row_reduced(IntMatrix(rows), target)
        solvable = x is not None
    else:
        solvable = True
        order = g.order
        m = order
        p = 2
        while m > 1:
            if m % p == 0:
                k = 0
                while m % p == 0:
                    m //= p
                    k += 1
                ok, cert = solvable_mod_prime_power(rows, target, p, k)
                if not ok:
                    solvable = False
                    break
            p += 1
    if solvable:
        return EliminationOutcome.none()
    return EliminationOutcome.of(
        "partially-central",
        central_rows=[table.char_labels[ri] for ri, _ in s_set],
        eigenvalues={table.char_labels[ri]: f"zeta{n}^{l}" for ri, l in s_set},
        certificate=cert,
    )
