"""
Möbius function of a finite lattice.

Computes μ(0̂, x) for every x by the defining recursion, by the crosscut
sum over all atom subsets, and by the signed count of NBB sets for an atom
order. Each result comes back as a ``MobiusVector`` checked against
Σ_{y≤x} μ(y) = δ(0̂, x), unless the caller passes ``validate=False`` and
compares it with the recursion instead.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from engines.lattice_core.lattice import FiniteLattice
from engines.mobius_engine.atom_order import AtomOrder
from engines.mobius_engine.atom_sets import AtomSubsetTables, atom_subset_tables, superset_closure
from shared.exceptions import EmptySetError, MethodDisagreementError, MobiusInvariantError, ValidationError
from shared.shared_types import MobiusMethod
from shared.utils import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class MobiusVector:
    """μ(0̂, x) for every element x, by element index"""

    values: Tuple[int, ...]
    method: MobiusMethod = MobiusMethod.RECURSIVE

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    @classmethod
    def validated(cls, lattice: FiniteLattice, values: Sequence[int], method: MobiusMethod) -> "MobiusVector":
        array = np.asarray(values, dtype=np.int64)
        sums = array @ lattice.leq.astype(np.int64)
        expected = np.zeros(lattice.size, dtype=np.int64)
        expected[lattice.bottom] = 1
        bad = np.flatnonzero(sums != expected)
        if bad.size:
            x = int(bad[0])
            raise MobiusInvariantError(
                f"Σ μ(y) over y ≤ {lattice.label(x)} is {int(sums[x])}, expected {int(expected[x])}",
                element=x,
                details={"method": method.value},
            )
        return cls(tuple(int(v) for v in array), method)

    @classmethod
    def of(
        cls, lattice: FiniteLattice, values: Sequence[int], method: MobiusMethod, validate: bool = True
    ) -> "MobiusVector":
        """Validated unless the caller checks the values against the oracle itself"""
        if validate:
            return cls.validated(lattice, values, method)
        return cls(tuple(int(v) for v in values), method)


def mobius_recursive(lattice: FiniteLattice) -> MobiusVector:
    """μ(0̂) = 1 and μ(x) = -Σ_{y<x} μ(y)"""
    leq = lattice.leq
    mu = np.zeros(lattice.size, dtype=np.int64)
    for x in lattice.linear_extension:
        if x == lattice.bottom:
            mu[x] = 1
            continue
        below = leq[:, x].copy()
        below[x] = False
        mu[x] = -mu[below].sum()
    return MobiusVector.validated(lattice, mu, MobiusMethod.RECURSIVE)


def mobius_crosscut(lattice: FiniteLattice, validate: bool = True) -> MobiusVector:
    """Σ (-1)^|B| over all atom subsets B grouped by ⋁B"""
    tables = atom_subset_tables(lattice)
    selected = np.ones(tables.join_of.size, dtype=bool)
    return MobiusVector.of(lattice, tables.signed_counts(selected), MobiusMethod.CROSSCUT, validate)


def _check_host(lattice: FiniteLattice, order: AtomOrder) -> None:
    if order.host is not lattice and order.host.atoms != lattice.atoms:
        raise ValidationError("atom order belongs to a different lattice", field="order")


def bounded_below_flags(tables: AtomSubsetTables, order: AtomOrder) -> np.ndarray:
    """Mask table: True where the subset D is bounded below"""
    masks = tables.masks
    under = tables.strict_atoms_below[tables.join_of]
    predecessors = order.predecessor_masks()
    flags = masks != 0
    for q in range(tables.atom_count):
        has_q = ((masks >> q) & 1).astype(bool)
        flags &= ~has_q | ((under & predecessors[q]) != 0)
    return flags


def nbb_flags(lattice: FiniteLattice, order: AtomOrder) -> np.ndarray:
    """Mask table: True where the subset contains no bounded-below subset"""
    _check_host(lattice, order)
    tables = atom_subset_tables(lattice)
    return ~superset_closure(bounded_below_flags(tables, order), tables.atom_count)


def mobius_nbb(lattice: FiniteLattice, order: AtomOrder, validate: bool = True) -> MobiusVector:
    tables = atom_subset_tables(lattice)
    flags = nbb_flags(lattice, order)
    logger.debug("nbb_sets_counted", elements=lattice.size, nbb_sets=int(flags.sum()))
    return MobiusVector.of(lattice, tables.signed_counts(flags), MobiusMethod.NBB, validate)


def is_bounded_below(lattice: FiniteLattice, order: AtomOrder, atoms: Iterable[int]) -> bool:
    """
    True when D is nonempty and every d in D has some a ⊲ d with a < ⋁D.

    Args:
        atoms: Element indices of the atoms in D
    """
    subset = sorted(set(atoms))
    if not subset:
        raise EmptySetError("bounded-below test needs a nonempty set of atoms", field="atoms")
    _check_host(lattice, order)
    for d in subset:
        order.position(d)
    top = lattice.join_set(subset)
    for d in subset:
        if not any(order.below(a, d) and lattice.lt(a, top) for a in lattice.atoms):
            return False
    return True


def enumerate_nbb_bases(lattice: FiniteLattice, order: AtomOrder, x: int) -> List[Tuple[int, ...]]:
    """NBB bases of x: NBB sets with join x, lexicographic by atom index"""
    tables = atom_subset_tables(lattice)
    return tables.subsets_joining_to(nbb_flags(lattice, order), x)


def enumerate_crosscut_terms(lattice: FiniteLattice, x: int) -> List[Tuple[int, ...]]:
    """Atom subsets with join x"""
    tables = atom_subset_tables(lattice)
    return tables.subsets_joining_to(np.ones(tables.join_of.size, dtype=bool), x)


def term_counts(lattice: FiniteLattice, order: AtomOrder) -> Tuple[np.ndarray, np.ndarray]:
    """Per element: number of NBB bases and number of crosscut terms"""
    tables = atom_subset_tables(lattice)
    n = lattice.size
    nbb = np.bincount(tables.join_of[nbb_flags(lattice, order)], minlength=n).astype(np.int64)
    crosscut = np.bincount(tables.join_of, minlength=n).astype(np.int64)
    return nbb, crosscut


def verify_against_oracle(
    lattice: FiniteLattice, vector: MobiusVector, oracle: Optional[MobiusVector] = None
) -> MobiusVector:
    """Compare with the recursive values; raise on the first element that differs"""
    expected = oracle if oracle is not None else mobius_recursive(lattice)
    for x in range(lattice.size):
        if vector[x] != expected[x]:
            raise MethodDisagreementError(
                f"{vector.method.value} gives μ({lattice.label(x)}) = {vector[x]}, recursion gives {expected[x]}",
                method=vector.method.value,
                element=x,
                value=vector[x],
                expected=expected[x],
            )
    return vector


def mobius_table(lattice: FiniteLattice, vector: MobiusVector) -> pd.DataFrame:
    """One row per element: index, label, μ"""
    return pd.DataFrame(
        {
            "element": np.arange(lattice.size, dtype=np.int64),
            "label": list(lattice.labels),
            "mu": vector.as_array(),
        }
    )
