"""
Structure analysis

Left-modular chains, levels and the level condition, LL lattices,
generalized rank, characteristic polynomials and supersolvability.
"""

from engines.lattice_core.properties import is_distributive
from engines.structure_analysis.chains import (
    FactorizationResult,
    LevelConditionResult,
    LevelPartition,
    LLWitness,
    MaximalChain,
    as_maximal_chain,
    characteristic_polynomial,
    find_left_modular_chain,
    generalized_rank,
    induced_atom_order,
    is_left_modular_chain,
    is_left_modular_element,
    is_ll,
    iter_left_modular_chains,
    left_modular_elements,
    level_condition_holds,
    levels_from_chain,
    ll_factorization_check,
    ll_witness_for,
    longest_chain_rank_check,
    nbb_level_characterization,
    same_level_join_witness,
)
from engines.structure_analysis.polynomial import IntegerPolynomial, format_factored
from engines.structure_analysis.supersolvable import (
    RankComparison,
    RankComparisonRow,
    is_supersolvable_with,
    levelcondition_from_circuit_condition,
    rank_comparison,
    sublattice_generated,
)

__version__ = "1.0.0"
__author__ = "lattice-mobius developers"

__all__ = [
    "FactorizationResult",
    "IntegerPolynomial",
    "LLWitness",
    "LevelConditionResult",
    "LevelPartition",
    "MaximalChain",
    "RankComparison",
    "RankComparisonRow",
    "as_maximal_chain",
    "characteristic_polynomial",
    "find_left_modular_chain",
    "format_factored",
    "generalized_rank",
    "induced_atom_order",
    "is_distributive",
    "is_left_modular_chain",
    "is_left_modular_element",
    "is_ll",
    "is_supersolvable_with",
    "iter_left_modular_chains",
    "left_modular_elements",
    "level_condition_holds",
    "levelcondition_from_circuit_condition",
    "levels_from_chain",
    "ll_factorization_check",
    "ll_witness_for",
    "longest_chain_rank_check",
    "nbb_level_characterization",
    "rank_comparison",
    "same_level_join_witness",
    "sublattice_generated",
]
