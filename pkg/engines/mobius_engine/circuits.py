"""
Independent sets, circuits and NBC bases over the atoms of a lattice.

B is independent when ⋁B' < ⋁B for every proper subset B'. Circuits are
the minimal dependent sets. Given a total order on the atoms, the NBC sum
reproduces μ whenever every circuit C satisfies ⋁C = ⋁(C minus its first
atom).
"""

from typing import Iterable, List, Optional, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from engines.mobius_engine.atom_sets import AtomSubsetTables, atom_subset_tables, superset_closure
from engines.mobius_engine.mobius import MobiusVector
from shared.exceptions import ConditionCprimeViolatedError, ValidationError
from shared.shared_types import MobiusMethod
from shared.utils import bits_of, setup_logger

logger = setup_logger(__name__)


def is_independent(lattice: FiniteLattice, atoms: Iterable[int]) -> bool:
    subset = sorted(set(atoms))
    top = lattice.join_set(subset)
    return all(lattice.join_set(a for a in subset if a != b) != top for b in subset)


def independence_flags(tables: AtomSubsetTables) -> np.ndarray:
    # dropping any one atom must lower the join; this covers all proper subsets
    masks = tables.masks
    flags = np.ones(masks.size, dtype=bool)
    for b in range(tables.atom_count):
        has_b = ((masks >> b) & 1).astype(bool)
        flags &= ~has_b | (tables.join_of[masks ^ (1 << b)] != tables.join_of)
    return flags


def circuit_masks(tables: AtomSubsetTables) -> np.ndarray:
    independent = independence_flags(tables)
    masks = tables.masks
    minimal = ~independent
    for b in range(tables.atom_count):
        has_b = ((masks >> b) & 1).astype(bool)
        minimal &= ~has_b | independent[masks ^ (1 << b)]
    return np.flatnonzero(minimal)


def enumerate_circuits(lattice: FiniteLattice) -> List[Tuple[int, ...]]:
    tables = atom_subset_tables(lattice)
    return sorted(tables.atoms_of(m) for m in circuit_masks(tables))


def _require_total(order: AtomOrder) -> np.ndarray:
    if not order.is_total():
        raise ValidationError("a total order on the atoms is required", field="order")
    return order.predecessor_masks()


def _first_position(mask: int, predecessors: np.ndarray) -> int:
    return next(p for p in bits_of(mask) if not int(predecessors[p]) & mask)


def broken_circuits(lattice: FiniteLattice, total_order: AtomOrder) -> List[Tuple[int, ...]]:
    predecessors = _require_total(total_order)
    tables = atom_subset_tables(lattice)
    broken = []
    for mask in circuit_masks(tables):
        mask = int(mask)
        broken.append(tables.atoms_of(mask & ~(1 << _first_position(mask, predecessors))))
    return sorted(broken)


def find_cprime_violation(lattice: FiniteLattice, total_order: AtomOrder) -> Optional[Tuple[int, ...]]:
    """A circuit C with ⋁C ≠ ⋁(C minus its first atom), if any"""
    predecessors = _require_total(total_order)
    tables = atom_subset_tables(lattice)
    for mask in circuit_masks(tables):
        mask = int(mask)
        rest = mask & ~(1 << _first_position(mask, predecessors))
        if tables.join_of[rest] != tables.join_of[mask]:
            return tables.atoms_of(mask)
    return None


def condition_Cprime_holds(lattice: FiniteLattice, total_order: AtomOrder) -> bool:
    return find_cprime_violation(lattice, total_order) is None


def nbc_flags(lattice: FiniteLattice, total_order: AtomOrder) -> np.ndarray:
    """Mask table: True where the subset contains no broken circuit"""
    predecessors = _require_total(total_order)
    tables = atom_subset_tables(lattice)
    broken = np.zeros(tables.join_of.size, dtype=bool)
    for mask in circuit_masks(tables):
        mask = int(mask)
        broken[mask & ~(1 << _first_position(mask, predecessors))] = True
    return ~superset_closure(broken, tables.atom_count)


def mobius_nbc_generalized(lattice: FiniteLattice, total_order: AtomOrder, validate: bool = True) -> MobiusVector:
    circuit = find_cprime_violation(lattice, total_order)
    if circuit is not None:
        labels = [lattice.label(a) for a in circuit]
        raise ConditionCprimeViolatedError(
            f"circuit {{{', '.join(labels)}}} loses its join without its first atom", circuit=circuit
        )
    tables = atom_subset_tables(lattice)
    flags = nbc_flags(lattice, total_order)
    return MobiusVector.of(lattice, tables.signed_counts(flags), MobiusMethod.NBC, validate)


def enumerate_nbc_bases(lattice: FiniteLattice, total_order: AtomOrder, x: int) -> List[Tuple[int, ...]]:
    tables = atom_subset_tables(lattice)
    return tables.subsets_joining_to(nbc_flags(lattice, total_order), x)
