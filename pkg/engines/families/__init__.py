"""
Lattice families

Set partitions, non-crossing partitions (types A, B and D), shuffle
posets, dominance order, Tamari lattices, Boolean lattices and chains,
each with its canonical atom order and closed-form Möbius values.
"""

from engines.families.basic import boolean_lattice, chain
from engines.families.dominance import (
    Composition,
    DominanceAtomInfo,
    IntegerPartition,
    composition_join,
    dominance_atom_order,
    dominance_atoms,
    dominance_interval,
    dominance_lattice,
    dominance_mobius,
    dominance_run_order,
    partition_reflection,
)
from engines.families.partitions import (
    SetPartition,
    is_noncrossing_graph,
    nc_atom_order,
    noncrossing_lattice,
    noncrossing_mobius_top,
    noncrossing_tree_of,
    partition_lattice,
    partition_mobius_top,
)
from engines.families.random_lattices import random_closure_lattice
from engines.families.registry import FamilySpec, canonical_order, family_from_spec, parse_family_spec
from engines.families.shuffles import (
    ShuffleWord,
    crossed_letters,
    shuffle_atom_order,
    shuffle_join,
    shuffle_ll_chain,
    shuffle_mobius_top,
    shuffle_poset,
)
from engines.families.signed import ncb_atom_order, ncbd_atom_order, ncbd_lattice, ncbd_mobius_top
from engines.families.tamari import (
    BracketVector,
    Parenthesization,
    bracket_vector_of,
    parenthesization_of,
    tamari_delta_chain,
    tamari_join,
    tamari_lattice,
    tamari_meet,
    tamari_tree_of,
)

__version__ = "1.0.0"
__author__ = "lattice-mobius developers"

__all__ = [
    "BracketVector",
    "Composition",
    "DominanceAtomInfo",
    "FamilySpec",
    "IntegerPartition",
    "Parenthesization",
    "SetPartition",
    "ShuffleWord",
    "boolean_lattice",
    "bracket_vector_of",
    "canonical_order",
    "chain",
    "composition_join",
    "crossed_letters",
    "dominance_atom_order",
    "dominance_run_order",
    "dominance_atoms",
    "dominance_interval",
    "dominance_lattice",
    "dominance_mobius",
    "family_from_spec",
    "is_noncrossing_graph",
    "nc_atom_order",
    "ncb_atom_order",
    "ncbd_atom_order",
    "ncbd_lattice",
    "ncbd_mobius_top",
    "noncrossing_lattice",
    "noncrossing_mobius_top",
    "noncrossing_tree_of",
    "parenthesization_of",
    "parse_family_spec",
    "partition_lattice",
    "partition_mobius_top",
    "partition_reflection",
    "random_closure_lattice",
    "shuffle_atom_order",
    "shuffle_join",
    "shuffle_ll_chain",
    "shuffle_mobius_top",
    "shuffle_poset",
    "tamari_delta_chain",
    "tamari_join",
    "tamari_lattice",
    "tamari_meet",
    "tamari_tree_of",
]
