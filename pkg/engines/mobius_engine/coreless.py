"""
Coreless atom sets.

A selector picks a nonempty set M(x) of atoms below each x > 0̂. The
deletion step S removes from B every atom of M(x) for every x ≥ ⋁B, with
⋁ taken over the current set; the core of B is where S stabilizes. Sets
with an empty core give μ exactly as NBB bases do.
"""

from typing import Iterable, List, Mapping, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from engines.mobius_engine.atom_sets import MASK_DTYPE, atom_subset_tables
from engines.mobius_engine.mobius import MobiusVector
from shared.exceptions import InvalidSelectorError
from shared.shared_types import MobiusMethod
from shared.utils import bits_of, setup_logger

logger = setup_logger(__name__)


class AtomSelector:
    """Nonempty set M(x) of atoms below x for every x > 0̂"""

    def __init__(self, host: FiniteLattice, masks: Iterable[int]):
        masks = np.asarray(list(masks), dtype=MASK_DTYPE)
        if masks.shape != (host.size,):
            raise InvalidSelectorError(f"selector needs one entry per element, got {masks.shape}", field="selection")
        allowed = atom_subset_tables(host).atoms_below
        for x in range(host.size):
            if x == host.bottom:
                if masks[x]:
                    raise InvalidSelectorError("0̂ has no atoms below it", field="selection", value=host.label(x))
                continue
            if masks[x] == 0:
                raise InvalidSelectorError(f"M({host.label(x)}) is empty", field="selection", value=host.label(x))
            if masks[x] & ~allowed[x]:
                raise InvalidSelectorError(
                    f"M({host.label(x)}) contains an atom not below it", field="selection", value=host.label(x)
                )
        masks.flags.writeable = False
        self.host = host
        self.masks = masks

    @classmethod
    def from_mapping(cls, host: FiniteLattice, selection: Mapping[int, Iterable[int]]) -> "AtomSelector":
        """Build from element index -> atom element indices"""
        position = {atom: p for p, atom in enumerate(host.atoms)}
        masks = [0] * host.size
        for x, atoms in selection.items():
            mask = 0
            for atom in atoms:
                if atom not in position:
                    raise InvalidSelectorError(f"{host.label(atom)} is not an atom", field="selection", value=atom)
                mask |= 1 << position[atom]
            masks[x] = mask
        return cls(host, masks)

    @classmethod
    def all_atoms(cls, host: FiniteLattice) -> "AtomSelector":
        """M(x) = every atom below x"""
        masks = atom_subset_tables(host).atoms_below.copy()
        masks[host.bottom] = 0
        return cls(host, masks)

    def selected(self, x: int) -> Tuple[int, ...]:
        return tuple(self.host.atoms[p] for p in bits_of(int(self.masks[x])))


def selector_from_order(lattice: FiniteLattice, order: AtomOrder) -> AtomSelector:
    """M(x) = atoms ≤ x that are ⊴-minimal among the atoms ≤ x"""
    below = atom_subset_tables(lattice).atoms_below
    successors = order.successor_masks()
    masks = np.zeros(lattice.size, dtype=MASK_DTYPE)
    for x in range(lattice.size):
        if x == lattice.bottom:
            continue
        shadowed = 0
        for p in bits_of(int(below[x])):
            shadowed |= int(successors[p])
        masks[x] = below[x] & ~shadowed
    return AtomSelector(lattice, masks)


def _deleted_above(lattice: FiniteLattice, selector: AtomSelector) -> np.ndarray:
    """For each y, the union of M(x) over all x ≥ y"""
    leq = lattice.leq
    return np.array(
        [np.bitwise_or.reduce(selector.masks[leq[y]]) for y in range(lattice.size)], dtype=MASK_DTYPE
    )


def core(lattice: FiniteLattice, selector: AtomSelector, atoms: Iterable[int]) -> Tuple[int, ...]:
    """Iterate S on B until it stabilizes; returns atom element indices"""
    tables = atom_subset_tables(lattice)
    deleted = _deleted_above(lattice, selector)
    current = tables.mask_of_atoms(atoms)
    while True:
        shrunk = current & ~int(deleted[tables.join_of[current]])
        if shrunk == current:
            return tables.atoms_of(current)
        current = shrunk


def coreless_flags(lattice: FiniteLattice, selector: AtomSelector) -> np.ndarray:
    """Mask table: True where the core is empty"""
    tables = atom_subset_tables(lattice)
    deleted = _deleted_above(lattice, selector)
    current = tables.masks
    rounds = 0
    while True:
        shrunk = current & ~deleted[tables.join_of[current]]
        rounds += 1
        if np.array_equal(shrunk, current):
            break
        current = shrunk
    logger.debug("core_fixpoint_reached", rounds=rounds, subsets=current.size)
    return current == 0


def mobius_coreless(lattice: FiniteLattice, selector: AtomSelector, validate: bool = True) -> MobiusVector:
    tables = atom_subset_tables(lattice)
    return MobiusVector.of(
        lattice, tables.signed_counts(coreless_flags(lattice, selector)), MobiusMethod.CORELESS, validate
    )


def enumerate_coreless_bases(lattice: FiniteLattice, selector: AtomSelector, x: int) -> List[Tuple[int, ...]]:
    tables = atom_subset_tables(lattice)
    return tables.subsets_joining_to(coreless_flags(lattice, selector), x)
