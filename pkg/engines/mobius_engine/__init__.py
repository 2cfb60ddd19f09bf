"""
Möbius engine

Möbius functions by recursion, crosscut, NBB bases, coreless sets and
generalized NBC bases, together with atom orders and perfect-order search.
"""

from engines.mobius_engine.atom_order import (
    AtomOrder,
    incomparability_order,
    read_atom_order,
    write_atom_order,
)
from engines.mobius_engine.atom_sets import AtomSubsetTables, atom_subset_tables
from engines.mobius_engine.circuits import (
    broken_circuits,
    condition_Cprime_holds,
    enumerate_circuits,
    enumerate_nbc_bases,
    find_cprime_violation,
    is_independent,
    mobius_nbc_generalized,
)
from engines.mobius_engine.coreless import (
    AtomSelector,
    core,
    enumerate_coreless_bases,
    mobius_coreless,
    selector_from_order,
)
from engines.mobius_engine.mobius import (
    MobiusVector,
    enumerate_crosscut_terms,
    enumerate_nbb_bases,
    is_bounded_below,
    mobius_crosscut,
    mobius_nbb,
    mobius_recursive,
    mobius_table,
    term_counts,
    verify_against_oracle,
)
from engines.mobius_engine.perfect import PerfectionReport, is_perfect_order, iter_atom_relations, search_perfect_order

__version__ = "1.0.0"
__author__ = "lattice-mobius developers"

__all__ = [
    "AtomOrder",
    "AtomSelector",
    "AtomSubsetTables",
    "MobiusVector",
    "PerfectionReport",
    "atom_subset_tables",
    "broken_circuits",
    "condition_Cprime_holds",
    "core",
    "enumerate_circuits",
    "enumerate_coreless_bases",
    "enumerate_crosscut_terms",
    "enumerate_nbb_bases",
    "enumerate_nbc_bases",
    "find_cprime_violation",
    "incomparability_order",
    "is_bounded_below",
    "is_independent",
    "is_perfect_order",
    "iter_atom_relations",
    "mobius_coreless",
    "mobius_crosscut",
    "mobius_nbb",
    "mobius_nbc_generalized",
    "mobius_recursive",
    "mobius_table",
    "read_atom_order",
    "search_perfect_order",
    "selector_from_order",
    "term_counts",
    "verify_against_oracle",
    "write_atom_order",
]
