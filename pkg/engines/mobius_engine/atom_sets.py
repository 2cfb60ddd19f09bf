"""
Per-subset tables over the atom set.

A subset of atoms is a bit mask over atom positions. For a lattice with k
atoms every table below has length 2^k and is indexed by mask.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple

import numpy as np

from engines.lattice_core.lattice import FiniteLattice
from shared.constants import Capacity
from shared.exceptions import ValidationError, check_capacity
from shared.utils import bits_of, setup_logger

logger = setup_logger(__name__)

MASK_DTYPE = np.int64


@dataclass(frozen=True, eq=False)
class AtomSubsetTables:
    """Join, size and sign of every atom subset"""

    lattice: FiniteLattice
    join_of: np.ndarray
    sizes: np.ndarray
    atoms_below: np.ndarray
    strict_atoms_below: np.ndarray

    @property
    def atom_count(self) -> int:
        return len(self.lattice.atoms)

    @property
    def masks(self) -> np.ndarray:
        return np.arange(self.join_of.size, dtype=MASK_DTYPE)

    @property
    def odd(self) -> np.ndarray:
        return (self.sizes & 1).astype(bool)

    def atoms_of(self, mask: int) -> Tuple[int, ...]:
        """Element indices of the atoms in ``mask``, ascending"""
        atoms = self.lattice.atoms
        return tuple(atoms[p] for p in bits_of(int(mask)))

    def mask_of_atoms(self, elements: Iterable[int]) -> int:
        position = {atom: p for p, atom in enumerate(self.lattice.atoms)}
        mask = 0
        for element in elements:
            if element not in position:
                raise ValidationError(f"element {element} is not an atom", field="atoms", value=element)
            mask |= 1 << position[element]
        return mask

    def signed_counts(self, selected: np.ndarray) -> np.ndarray:
        """Σ (-1)^|B| over selected masks, grouped by ⋁B"""
        n = self.lattice.size
        odd = self.odd
        even_counts = np.bincount(self.join_of[selected & ~odd], minlength=n)
        odd_counts = np.bincount(self.join_of[selected & odd], minlength=n)
        return (even_counts - odd_counts).astype(np.int64)

    def parity_counts(self, selected: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Number of even and odd selected masks per join"""
        n = self.lattice.size
        odd = self.odd
        return (
            np.bincount(self.join_of[selected & ~odd], minlength=n).astype(np.int64),
            np.bincount(self.join_of[selected & odd], minlength=n).astype(np.int64),
        )

    def subsets_joining_to(self, selected: np.ndarray, x: int) -> List[Tuple[int, ...]]:
        """Selected subsets with join ``x``, lexicographically by atom index"""
        masks = np.flatnonzero(selected & (self.join_of == x))
        return sorted(self.atoms_of(m) for m in masks)


@lru_cache(maxsize=8)
def atom_subset_tables(lattice: FiniteLattice) -> AtomSubsetTables:
    atoms = lattice.atoms
    k = len(atoms)
    check_capacity(k, Capacity.MAX_ENUMERATION_ATOMS, "atom count")
    join = lattice.join_table

    join_of = np.empty(1 << k, dtype=join.dtype)
    sizes = np.zeros(1 << k, dtype=np.int8)
    join_of[0] = lattice.bottom
    for b, atom in enumerate(atoms):
        half = 1 << b
        join_of[half:2 * half] = join[join_of[:half], atom]
        sizes[half:2 * half] = sizes[:half] + 1

    weights = np.left_shift(np.int64(1), np.arange(k, dtype=np.int64))
    below = lattice.leq[list(atoms), :].T if k else np.zeros((lattice.size, 0), dtype=bool)
    atoms_below = (below.astype(np.int64) * weights[None, :]).sum(axis=1).astype(MASK_DTYPE)
    strict = atoms_below.copy()
    for b, atom in enumerate(atoms):
        strict[atom] &= ~(1 << b)

    logger.debug("atom_subset_tables_built", atoms=k, subsets=1 << k, elements=lattice.size)
    for array in (join_of, sizes, atoms_below, strict):
        array.flags.writeable = False
    return AtomSubsetTables(lattice, join_of, sizes, atoms_below, strict)


def superset_closure(flags: np.ndarray, k: int) -> np.ndarray:
    """Mark every mask that contains some flagged mask"""
    closed = np.array(flags, dtype=bool, copy=True)
    for b in range(k):
        view = closed.reshape(-1, 2, 1 << b)
        view[:, 1, :] |= view[:, 0, :]
    return closed
