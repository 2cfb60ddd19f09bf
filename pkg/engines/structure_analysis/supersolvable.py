"""
Supersolvability, generated sublattices, rank comparison and the circuit
form of the level condition.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from engines.lattice_core.lattice import FiniteLattice
from engines.lattice_core.properties import is_distributive, is_ranked
from engines.mobius_engine.atom_sets import atom_subset_tables
from engines.mobius_engine.circuits import circuit_masks
from engines.mobius_engine.mobius import MobiusVector, mobius_recursive
from engines.structure_analysis.chains import as_maximal_chain, generalized_rank, level_condition_holds, levels_from_chain
from shared.constants import Capacity
from shared.exceptions import PreconditionError, check_capacity
from shared.utils import bits_of, setup_logger

logger = setup_logger(__name__)


def sublattice_generated(lattice: FiniteLattice, elements: Iterable[int]) -> frozenset:
    """Closure of ``elements`` under meet and join, by worklist saturation"""
    join, meet = lattice.join_table, lattice.meet_table
    closed = set()
    pending = list(dict.fromkeys(int(x) for x in elements))
    while pending:
        x = pending.pop()
        if x in closed:
            continue
        for y in list(closed):
            for z in (int(join[x, y]), int(meet[x, y])):
                if z not in closed and z != x:
                    pending.append(z)
        closed.add(x)
    return frozenset(closed)


def is_supersolvable_with(lattice: FiniteLattice, chain) -> bool:
    """Δ together with every maximal chain generates a distributive sublattice"""
    check_capacity(lattice.size, Capacity.MAX_SUPERSOLVABLE_ELEMENTS, "supersolvability scan over elements")
    delta = as_maximal_chain(lattice, chain).elements
    scanned = 0
    for other in lattice.iter_maximal_chains():
        scanned += 1
        if not is_distributive(lattice, sublattice_generated(lattice, delta + tuple(other))):
            logger.debug("non_distributive_closure", chains_scanned=scanned)
            return False
    logger.debug("supersolvable", chains_scanned=scanned)
    return True


@dataclass(frozen=True)
class RankComparisonRow:
    element: int
    rank: int
    generalized_rank: int
    mu: int


@dataclass(frozen=True)
class RankComparison:
    """Elements where the generalized rank differs from the ordinary rank"""

    differences: Tuple[RankComparisonRow, ...]

    @property
    def consistent(self) -> bool:
        """Every difference sits on an element with μ = 0"""
        return all(row.mu == 0 for row in self.differences)


def rank_comparison(
    lattice: FiniteLattice, chain, mobius: Optional[MobiusVector] = None
) -> RankComparison:
    rank = is_ranked(lattice)
    if rank is None:
        raise PreconditionError("rank comparison needs a ranked lattice", details={"size": lattice.size})
    mu = mobius if mobius is not None else mobius_recursive(lattice)
    generalized = generalized_rank(lattice, chain)
    rows = tuple(
        RankComparisonRow(x, rank[x], generalized[x], mu[x])
        for x in range(lattice.size)
        if rank[x] != generalized[x]
    )
    return RankComparison(rows)


def levelcondition_from_circuit_condition(lattice: FiniteLattice, chain) -> bool:
    """
    If every circuit with a unique top-level atom keeps its join when that
    atom is removed, the level condition must hold. Returns whether the
    implication is satisfied on this lattice and chain.
    """
    levels = levels_from_chain(lattice, chain)
    tables = atom_subset_tables(lattice)
    level_of = [levels.level_of(atom) for atom in lattice.atoms]
    hypothesis = True
    for mask in circuit_masks(tables):
        mask = int(mask)
        positions = bits_of(mask)
        highest = max(level_of[p] for p in positions)
        tops = [p for p in positions if level_of[p] == highest]
        if len(tops) != 1:
            continue
        if tables.join_of[mask] != tables.join_of[mask & ~(1 << tops[0])]:
            hypothesis = False
            break
    if not hypothesis:
        return True
    return level_condition_holds(lattice, chain).holds
