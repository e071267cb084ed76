"""Modular lattice-method contradictions for candidates of order q*p.

A candidate of order q*p (distinct primes, reduction at p = 3) splits each
character's eigenvalue profile by the q-part eigenvalue eta; each eta-part
carries multiplicities (a_0, ..., a_{p-1}) of the p-part eigenvalues. For
p = 3 the indecomposable lattices of the cyclic group of order three reduce
to Jordan blocks of sizes 1, 2, 3, which forces:
  - a part is a direct sum of 1-dimensional summands iff a_1 = a_2 = 0;
  - a part contains an indecomposable summand of dimension >= 2 iff a_1 > 0;
  - a part with (0, 1, 1) is a single 2-dimensional indecomposable.
When the decomposition matrix dominates row-wise (every constituent of chi's
reduction occurs in psi's with at least the multiplicity), chi's eta-part
embeds as a sub- or factor module of psi's; conflicting shapes eliminate the
candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eliminate import EliminationOutcome
from .groups import CharacterTable
from .groups.brauer import DecompositionMatrix
from .help import CandidateSolution


class UnsupportedLatticeCase(Exception):
    pass


@dataclass(frozen=True)
class LatticeSplit:
    """Per q-th-root-of-unity part, the p-eigenvalue multiplicities."""

    p: int
    q: int
    parts: tuple  # tuple of (eta exponent a in [0,q), tuple(a_0..a_{p-1}))

    def part(self, eta_exp: int):
        for a, vec in self.parts:
            if a == eta_exp:
                return vec
        return tuple([0] * self.p)


def split_profile(
    sol: CandidateSolution, table: CharacterTable, char_label: str, p: int, q: int
) -> LatticeSplit:
    """Partition the chi-spectrum by the q-part eigenvalue."""
    if sol.n != p * q or p == q:
        raise UnsupportedLatticeCase(f"order {sol.n} is not {q}*{p}")
    ri = table.label_to_row[char_label]
    mus = sol.profile[ri]
    n = sol.n
    parts: dict[int, list[int]] = {}
    inv_p = pow(p, -1, q)
    inv_q = pow(q, -1, p)
    for l, m in enumerate(mus):
        if m == 0:
            continue
        a = (l * inv_p) % q       # zeta_n^l = zeta_q^a * zeta_p^j
        j = (l * inv_q) % p
        parts.setdefault(a, [0] * p)
        parts[a][j] += m
    packed = tuple(sorted((a, tuple(vec)) for a, vec in parts.items() if any(vec)))
    return LatticeSplit(p=p, q=q, parts=packed)


@dataclass(frozen=True)
class SummandShape:
    all_one_dimensional: bool
    has_indecomposable_dim2: bool
    single_two_dimensional: bool


def summand_shape(part, p: int = 3) -> SummandShape:
    """Shape facts from the order-3 lattice classification (p = 3 only)."""
    if p != 3:
        raise UnsupportedLatticeCase(f"p = {p} is not supported")
    if len(part) != 3:
        raise UnsupportedLatticeCase("part must have three multiplicities")
    a0, a1, a2 = part
    if a1 != a2:
        raise UnsupportedLatticeCase(
            f"part {part} has a_1 != a_2, outside the rational classification"
        )
    return SummandShape(
        all_one_dimensional=(a1 == 0 and a2 == 0),
        has_indecomposable_dim2=(a1 > 0),
        single_two_dimensional=(part == (0, 1, 1)),
    )


def lattice_contradiction(
    sol: CandidateSolution,
    table: CharacterTable,
    decomp: DecompositionMatrix,
    p: int,
    q: int,
) -> EliminationOutcome:
    """Search for a shape conflict across decomposition-dominated pairs."""
    if decomp.prime != p:
        raise UnsupportedLatticeCase("decomposition matrix prime mismatch")
    labels = decomp.ordinary_labels
    rows = decomp.matrix
    splits = {}
    for lab in labels:
        if lab in table.label_to_row:
            splits[lab] = split_profile(sol, table, lab, p, q)
    for i, chi in enumerate(labels):
        if chi not in splits:
            continue
        for j, psi in enumerate(labels):
            if i == j or psi not in splits:
                continue
            if not all(a <= b for a, b in zip(rows[i], rows[j])):
                continue
            for eta in range(q):
                part_chi = splits[chi].part(eta)
                part_psi = splits[psi].part(eta)
                try:
                    shape_chi = summand_shape(part_chi, p)
                    shape_psi = summand_shape(part_psi, p)
                except UnsupportedLatticeCase:
                    continue
                if shape_chi.has_indecomposable_dim2 and shape_psi.all_one_dimensional:
                    return EliminationOutcome.of(
                        "lattice",
                        chi=chi,
                        psi=psi,
                        eta_exponent=eta,
                        chi_part=list(part_chi),
                        psi_part=list(part_psi),
                        prime=p,
                    )
    return EliminationOutcome.none()
