"""Core geometry, nucleolus, alpha ranges, oracles and implication checks."""
from ..values import is_imputation
from .alpha_range import AlphaInterval, AlphaRange, alpha_core_range
from .core import (
    CoreCertificate,
    CoreStatus,
    TopDominance,
    alpha_top_dominance,
    check_maincore_iff,
    core_membership,
    core_nonempty,
)
from .nucleolus import nucleolus
from .oracles import aggregate_min_oracle, minimax_oracle
from .structure import (
    KGameStructure,
    ThreePlayerCoreReport,
    balanced_externalities_check,
    check_gately_equals_shapley,
    check_topdominance_implications,
    kgame_structure,
    three_player_core_check,
)

__all__ = [
    "AlphaInterval",
    "AlphaRange",
    "CoreCertificate",
    "CoreStatus",
    "KGameStructure",
    "ThreePlayerCoreReport",
    "TopDominance",
    "aggregate_min_oracle",
    "alpha_core_range",
    "alpha_top_dominance",
    "balanced_externalities_check",
    "check_gately_equals_shapley",
    "check_maincore_iff",
    "check_topdominance_implications",
    "core_membership",
    "core_nonempty",
    "is_imputation",
    "kgame_structure",
    "minimax_oracle",
    "nucleolus",
    "three_player_core_check",
]
