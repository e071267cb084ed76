"""Permutation-group engine: classes, power maps, subgroup structure,
quotients with fusion, and exact ordinary character tables."""

from .brauer import BrauerData, DecompositionMatrix, brauer_values
from .chartable import CharacterTable, TableValidationError, dixon_character_table
from .classes import ClassData, ConjClass, conjugacy_classes
from .perm import (
    GroupData,
    OrderCapExceeded,
    from_cycles,
    group_from_generators,
    identity_perm,
    inverse,
    mul,
    perm_order,
    perm_power,
)
from .subgroups import (
    StructureFlags,
    SubgroupHandle,
    c2_complement,
    derived_series,
    is_cyclic_subgroup,
    lower_central_series,
    normal_subgroups,
    quotient_with_fusion,
    structure_predicates,
    subgroup_closure,
)

__all__ = [
    "BrauerData",
    "CharacterTable",
    "ClassData",
    "ConjClass",
    "DecompositionMatrix",
    "GroupData",
    "OrderCapExceeded",
    "StructureFlags",
    "SubgroupHandle",
    "TableValidationError",
    "brauer_values",
    "c2_complement",
    "conjugacy_classes",
    "derived_series",
    "dixon_character_table",
    "from_cycles",
    "group_from_generators",
    "identity_perm",
    "inverse",
    "is_cyclic_subgroup",
    "lower_central_series",
    "mul",
    "normal_subgroups",
    "perm_order",
    "perm_power",
    "quotient_with_fusion",
    "structure_predicates",
    "subgroup_closure",
]
