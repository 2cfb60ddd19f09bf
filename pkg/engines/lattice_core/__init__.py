"""
Lattice core

Finite lattices as dense integer indices with eager order, join and meet
tables, plus intervals, direct products, structural predicates and the
lattice text format.
"""

from engines.lattice_core.lattice import (
    FiniteLattice,
    direct_product,
    from_cover_relations,
    interval,
    join_set,
    maximal_chains,
)
from engines.lattice_core.properties import (
    is_atomic,
    is_distributive,
    is_geometric,
    is_ranked,
    is_semimodular,
    longest_chain_lengths,
)
from engines.lattice_core.textio import load_lattice, read_lattice, save_lattice, write_lattice

__version__ = "1.0.0"
__author__ = "lattice-mobius developers"

__all__ = [
    "FiniteLattice",
    "direct_product",
    "from_cover_relations",
    "interval",
    "join_set",
    "is_atomic",
    "is_distributive",
    "is_geometric",
    "is_ranked",
    "is_semimodular",
    "longest_chain_lengths",
    "maximal_chains",
    "load_lattice",
    "read_lattice",
    "save_lattice",
    "write_lattice",
]
