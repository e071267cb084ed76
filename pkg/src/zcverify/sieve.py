"""Theoretical sieves that settle a group before any constraint solving.

The checks run in a fixed order: nilpotent, cyclic-by-abelian, derived
subgroup inside a Sylow subgroup, C2 x H with H already verified, and an
optional metabelian criterion supplied by configuration (off by default
because its exact statement lives outside this artifact's data).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .groups import GroupData, c2_complement, structure_predicates

REASONS = (
    "nilpotent",
    "cyclic-by-abelian",
    "derived-in-Sylow",
    "C2-times-known",
    "metabelian-case-a",
    "passes",
)


@dataclass(frozen=True)
class SieveVerdict:
    eliminated: bool
    reason: str

    def __post_init__(self):
        assert self.reason in REASONS
        assert self.eliminated == (self.reason != "passes")


def sieve_group(
    g: GroupData,
    known_good: frozenset[str] = frozenset(),
    complement_check: Optional[Callable[[GroupData], bool]] = None,
    metabelian_case_a: Optional[Callable[[GroupData], bool]] = None,
) -> SieveVerdict:
    """First matching reason wins; `passes` otherwise.

    The C2 x H test fires when a central involution has a complement H and H
    is established: either H's corpus name appears in known_good, or the
    supplied complement_check (typically the inductive pipeline) verifies it.
    """
    flags = structure_predicates(g)
    if flags.nilpotent:
        return SieveVerdict(True, "nilpotent")
    if flags.cyclic_by_abelian:
        return SieveVerdict(True, "cyclic-by-abelian")
    if flags.derived_in_sylow:
        return SieveVerdict(True, "derived-in-Sylow")
    if flags.c2_direct_factor:
        h = c2_complement(g)
        if h is not None:
            if h.name in known_good or (complement_check is not None and complement_check(h)):
                return SieveVerdict(True, "C2-times-known")
    if metabelian_case_a is not None and metabelian_case_a(g):
        return SieveVerdict(True, "metabelian-case-a")
    return SieveVerdict(False, "passes")
